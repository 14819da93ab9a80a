//! Check reports with per-diagram witnesses.

use crate::expr::ObjExpr;
use crate::instance::DuoidalInstance;
use crate::morph::Morph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// Witness of a failed diagram: the first domain basis index where the two
/// composites differ, with both image columns.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub basis_index: usize,
    pub lhs_column: Vec<String>,
    pub rhs_column: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
}

impl CheckEntry {
    pub fn pass(name: impl Into<String>) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            value: None,
            dims: None,
        }
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status: Status::Skip,
            witness: None,
            value: Some(reason.into()),
            dims: None,
        }
    }

    pub fn with_value(mut self, v: impl Into<String>) -> CheckEntry {
        self.value = Some(v.into());
        self
    }

    pub fn with_dims(mut self, d: Vec<usize>) -> CheckEntry {
        self.dims = Some(d);
        self
    }
}

/// Ordered list of per-diagram records. Ordering is deterministic: entries
/// appear in pipeline order unless a checker sorts them by name.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn push(&mut self, e: CheckEntry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn any_fail(&self) -> bool {
        !self.all_pass()
    }

    pub fn sort_by_name(&mut self) {
        self.entries.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.get(name).map(|e| e.status)
    }
}

/// Compares two composites of the same diagram. The endpoints may be stated
/// with different (coherence-related) bracketings; both sides are conjugated
/// onto the right-hand side's endpoints before the entrywise comparison.
pub fn compare_diagram(
    inst: &DuoidalInstance,
    name: &str,
    lhs: &Morph,
    rhs: &Morph,
) -> CheckEntry {
    match aligned(inst, lhs, rhs) {
        Ok(lhs_mat) => {
            if lhs_mat == rhs.mat {
                CheckEntry::pass(name)
            } else {
                let f = rhs.mat.field;
                let mut basis_index = 0;
                'outer: for j in 0..rhs.mat.cols {
                    for i in 0..rhs.mat.rows {
                        if lhs_mat.get(i, j) != rhs.mat.get(i, j) {
                            basis_index = j;
                            break 'outer;
                        }
                    }
                }
                let render = |m: &crate::matrix::Mat| {
                    m.column(basis_index)
                        .iter()
                        .map(|v| f.render(v))
                        .collect::<Vec<_>>()
                };
                CheckEntry {
                    name: name.to_string(),
                    status: Status::Fail,
                    witness: Some(Witness {
                        basis_index,
                        lhs_column: render(&lhs_mat),
                        rhs_column: render(&rhs.mat),
                    }),
                    value: None,
                    dims: None,
                }
            }
        }
        Err(e) => CheckEntry {
            name: name.to_string(),
            status: Status::Fail,
            witness: None,
            value: Some(format!("cannot align endpoints: {e}")),
            dims: None,
        },
    }
}

fn aligned(
    inst: &DuoidalInstance,
    lhs: &Morph,
    rhs: &Morph,
) -> Result<crate::matrix::Mat, crate::error::Error> {
    let mut m = lhs.mat.clone();
    if lhs.dom != rhs.dom {
        let c = inst.coherence_iso(&rhs.dom, &lhs.dom)?;
        m = m.mul(&c.mat)?;
    }
    if lhs.cod != rhs.cod {
        let c = inst.coherence_iso(&lhs.cod, &rhs.cod)?;
        m = c.mat.mul(&m)?;
    }
    Ok(m)
}

/// Convenience: checks that a morphism equals the identity on its domain
/// (endpoints may differ by coherence).
pub fn compare_to_identity(
    inst: &DuoidalInstance,
    name: &str,
    lhs: &Morph,
    at: &ObjExpr,
) -> CheckEntry {
    match inst.id_morph(at) {
        Ok(id) => compare_diagram(inst, name, lhs, &id),
        Err(e) => CheckEntry {
            name: name.to_string(),
            status: Status::Fail,
            witness: None,
            value: Some(e.to_string()),
            dims: None,
        },
    }
}
