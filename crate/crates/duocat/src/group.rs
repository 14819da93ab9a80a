//! Finite group presented by its multiplication table; parameterizes the
//! graded instances.

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub names: Vec<String>,
    table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    /// Validates associativity, the two-sided identity and invertibility.
    /// The failing law is reported with a witness triple.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<GroupTable, Error> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup {
                law: "table shape".into(),
                witness: format!("{} elements, {} rows", n, table.len()),
            });
        }
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(Error::NotAGroup {
                        law: "table range".into(),
                        witness: format!("index {v}"),
                    });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup {
                law: "identity".into(),
                witness: "no two-sided identity".into(),
            })?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup {
                            law: "associativity".into(),
                            witness: format!("({}, {}, {})", names[a], names[b], names[c]),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(Error::NotAGroup {
                    law: "invertibility".into(),
                    witness: names[a].clone(),
                });
            }
        }
        Ok(GroupTable {
            names,
            table,
            identity,
        })
    }

    pub fn trivial() -> GroupTable {
        GroupTable {
            names: vec!["e".into()],
            table: vec![vec![0]],
            identity: 0,
        }
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        GroupTable {
            names,
            table,
            identity: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_is_a_group() {
        let g = GroupTable::new(
            vec!["e".into(), "g".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        assert_eq!(g.identity, 0);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn broken_table_reports_law_and_witness() {
        // constant table: no identity
        let err = GroupTable::new(
            vec!["a".into(), "b".into()],
            vec![vec![0, 0], vec![0, 0]],
        )
        .unwrap_err();
        match err {
            Error::NotAGroup { law, .. } => assert_eq!(law, "identity"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
