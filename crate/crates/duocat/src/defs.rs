//! Structure-definition files: a single self-describing JSON document per
//! verification run, with matrices inline so fixtures double as regression
//! goldens.

use serde_json::Value;

use crate::bimonoid::WeakBimonoidData;
use crate::error::Error;
use crate::expr::ObjExpr;
use crate::field::Field;
use crate::group::GroupTable;
use crate::hopf::HopfModule;
use crate::instance::{make_braided_vec, make_graded_vec, Dims, DuoidalInstance};
use crate::matrix::Mat;
use crate::morph::Morph;

/// A loaded and dimension-checked definition.
#[derive(Debug, Clone)]
pub struct Definition {
    pub inst: DuoidalInstance,
    pub data: Option<WeakBimonoidData>,
    /// raw module candidates (name, carrier, action); validated by the
    /// pipelines so failures become report entries
    pub modules: Vec<(String, ObjExpr, Morph)>,
    pub hopf_modules: Vec<HopfModule>,
    pub probes: Option<Vec<ObjExpr>>,
}

pub fn load_definition(path: &std::path::Path, field_override: Option<Field>) -> Result<Definition, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::ParseError {
        location: format!("{}: {e}", path.display()),
    })?;
    parse_definition(&text, field_override)
}

pub fn parse_definition(text: &str, field_override: Option<Field>) -> Result<Definition, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::ParseError {
        location: format!("line {}", e.line().max(1)),
    })?;
    let cat = v
        .get("category")
        .ok_or_else(|| schema("category", "missing"))?;
    let field = match field_override {
        Some(f) => f,
        None => parse_field(cat.get("field"))?,
    };
    if !field.is_prime_ok() {
        return Err(schema("category.field", "characteristic must be prime"));
    }
    let kind = cat
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| schema("category.kind", "missing"))?;
    let mut inst = match kind {
        "braided_vec" => make_braided_vec(field),
        "graded_vec" => {
            let g = cat
                .get("group")
                .ok_or_else(|| schema("category.group", "missing for graded_vec"))?;
            let elements: Vec<String> = g
                .get("elements")
                .and_then(|e| e.as_array())
                .ok_or_else(|| schema("category.group.elements", "missing"))?
                .iter()
                .map(|x| x.as_str().unwrap_or_default().to_string())
                .collect();
            let table: Vec<Vec<usize>> = g
                .get("table")
                .and_then(|t| t.as_array())
                .ok_or_else(|| schema("category.group.table", "missing"))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .map(|r| {
                            r.iter()
                                .map(|x| x.as_u64().unwrap_or(u64::MAX) as usize)
                                .collect()
                        })
                        .unwrap_or_default()
                })
                .collect();
            make_graded_vec(GroupTable::new(elements, table)?, field)
        }
        other => return Err(schema("category.kind", &format!("unknown kind '{other}'"))),
    };

    let order = inst.group().order();
    if let Some(atoms) = v.get("atoms") {
        let map = atoms
            .as_object()
            .ok_or_else(|| schema("atoms", "must be an object"))?;
        for (name, dims) in map {
            let grade_dims = match dims {
                Value::Number(n) => {
                    let total = n.as_u64().ok_or_else(|| schema(name, "bad dimension"))? as usize;
                    let mut d = vec![0; order];
                    d[inst.group().identity] = total;
                    d
                }
                Value::Array(items) => items
                    .iter()
                    .map(|x| x.as_u64().unwrap_or(u64::MAX) as usize)
                    .collect(),
                _ => return Err(schema(&format!("atoms.{name}"), "bad dimension spec")),
            };
            inst = inst.with_atom(name, grade_dims)?;
        }
    }

    let data = match (v.get("carrier"), v.get("monoid"), v.get("comonoid")) {
        (Some(c), Some(m), Some(cm)) => {
            let carrier = ObjExpr::from_json(c)?;
            let ca = carrier.clone();
            let mu = parse_morphism(&inst, m.get("mu"), "monoid.mu", &ca.c(&ca), &ca)?;
            let eta = parse_morphism(&inst, m.get("eta"), "monoid.eta", &ObjExpr::UnitI, &ca)?;
            let delta =
                parse_morphism(&inst, cm.get("delta"), "comonoid.delta", &ca, &ca.b(&ca))?;
            let eps = parse_morphism(&inst, cm.get("eps"), "comonoid.eps", &ca, &ObjExpr::UnitJ)?;
            Some(WeakBimonoidData::new(
                &inst, carrier, mu.mat, eta.mat, delta.mat, eps.mat,
            )?)
        }
        (None, None, None) => None,
        _ => {
            return Err(schema(
                "carrier/monoid/comonoid",
                "either all three or none must be present",
            ))
        }
    };

    let mut modules = Vec::new();
    if let Some(list) = v.get("modules").and_then(|m| m.as_array()) {
        let carrier = data
            .as_ref()
            .map(|d| d.carrier.clone())
            .ok_or_else(|| schema("modules", "modules need structure data"))?;
        for (k, item) in list.iter().enumerate() {
            let name = item
                .get("name")
                .and_then(|n| n.as_str())
                .unwrap_or(&format!("module{k}"))
                .to_string();
            let mc = ObjExpr::from_json(
                item.get("carrier")
                    .ok_or_else(|| schema(&format!("modules[{k}].carrier"), "missing"))?,
            )?;
            let gamma = parse_morphism(
                &inst,
                item.get("gamma"),
                &format!("modules[{k}].gamma"),
                &mc.c(&carrier),
                &mc,
            )?;
            modules.push((name, mc, gamma));
        }
    }

    let mut hopf_modules = Vec::new();
    if let Some(list) = v.get("hopf_modules").and_then(|m| m.as_array()) {
        let carrier = data
            .as_ref()
            .map(|d| d.carrier.clone())
            .ok_or_else(|| schema("hopf_modules", "candidates need structure data"))?;
        for (k, item) in list.iter().enumerate() {
            let name = item
                .get("name")
                .and_then(|n| n.as_str())
                .unwrap_or(&format!("hopf{k}"))
                .to_string();
            let mc = ObjExpr::from_json(
                item.get("carrier")
                    .ok_or_else(|| schema(&format!("hopf_modules[{k}].carrier"), "missing"))?,
            )?;
            let gamma = parse_morphism(
                &inst,
                item.get("gamma"),
                &format!("hopf_modules[{k}].gamma"),
                &mc.c(&carrier),
                &mc,
            )?;
            let rho = parse_morphism(
                &inst,
                item.get("rho"),
                &format!("hopf_modules[{k}].rho"),
                &mc,
                &mc.b(&carrier),
            )?;
            hopf_modules.push(HopfModule {
                name,
                carrier: mc,
                gamma,
                rho,
            });
        }
    }

    let probes = match v.get("probes") {
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .map(ObjExpr::from_json)
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Some(_) => return Err(schema("probes", "must be an array of objects")),
        None => None,
    };

    Ok(Definition {
        inst,
        data,
        modules,
        hopf_modules,
        probes,
    })
}

fn schema(field: &str, message: &str) -> Error {
    Error::SchemaError {
        field: field.to_string(),
        message: message.to_string(),
    }
}

/// Parses a morphism: a single matrix for the trivially graded case, or a
/// list of per-grade blocks in declared grade order.
fn parse_morphism(
    inst: &DuoidalInstance,
    v: Option<&Value>,
    field_name: &str,
    dom: &ObjExpr,
    cod: &ObjExpr,
) -> Result<Morph, Error> {
    let v = v.ok_or_else(|| schema(field_name, "missing"))?;
    let dd = inst.realize(dom)?;
    let dc = inst.realize(cod)?;
    let mat = match v {
        Value::Array(blocks) => {
            if blocks.len() != inst.group().order() {
                return Err(Error::DimensionError {
                    field: field_name.to_string(),
                    message: format!(
                        "{} grade blocks for a group of order {}",
                        blocks.len(),
                        inst.group().order()
                    ),
                });
            }
            assemble_blocks(inst, blocks, field_name, &dd, &dc)?
        }
        Value::Object(_) => {
            if inst.group().order() != 1 {
                // allow a single full matrix for graded instances too, as
                // long as it is grade-preserving (checked below)
                parse_mat(inst.field(), v, field_name)?
            } else {
                parse_mat(inst.field(), v, field_name)?
            }
        }
        _ => return Err(schema(field_name, "must be a matrix or a list of grade blocks")),
    };
    if mat.rows != dc.total() || mat.cols != dd.total() {
        return Err(Error::DimensionError {
            field: field_name.to_string(),
            message: format!(
                "matrix is {}x{}, expected {}x{}",
                mat.rows,
                mat.cols,
                dc.total(),
                dd.total()
            ),
        });
    }
    inst.morph_from_mat(dom, cod, mat)
        .map_err(|e| Error::DimensionError {
            field: field_name.to_string(),
            message: e.to_string(),
        })
}

fn assemble_blocks(
    inst: &DuoidalInstance,
    blocks: &[Value],
    field_name: &str,
    dom: &Dims,
    cod: &Dims,
) -> Result<Mat, Error> {
    let f = inst.field();
    let (doff, coff) = (dom.offsets(), cod.offsets());
    let mut out = Mat::zero(f, cod.total(), dom.total());
    for (x, b) in blocks.iter().enumerate() {
        let m = parse_mat(f, b, &format!("{field_name}[{x}]"))?;
        if m.rows != cod.0[x] || m.cols != dom.0[x] {
            return Err(Error::DimensionError {
                field: format!("{field_name}[{x}]"),
                message: format!(
                    "block is {}x{}, expected {}x{}",
                    m.rows, m.cols, cod.0[x], dom.0[x]
                ),
            });
        }
        for i in 0..m.rows {
            for (j, val) in m.row(i) {
                out.set(coff[x] + i, doff[x] + *j as usize, val.clone());
            }
        }
    }
    Ok(out)
}

/// `{"rows": r, "cols": c, "entries": [[...row-major rows...]]}` with
/// entries as wire-format scalars (or plain JSON integers).
pub fn parse_mat(field: Field, v: &Value, field_name: &str) -> Result<Mat, Error> {
    let rows = v
        .get("rows")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| schema(field_name, "missing rows"))? as usize;
    let cols = v
        .get("cols")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| schema(field_name, "missing cols"))? as usize;
    let entries = v
        .get("entries")
        .and_then(|x| x.as_array())
        .ok_or_else(|| schema(field_name, "missing entries"))?;
    if entries.len() != rows {
        return Err(Error::DimensionError {
            field: field_name.to_string(),
            message: format!("{} entry rows for a {rows}x{cols} matrix", entries.len()),
        });
    }
    let mut m = Mat::zero(field, rows, cols);
    for (i, row) in entries.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| schema(field_name, "entries must be rows"))?;
        if row.len() != cols {
            return Err(Error::DimensionError {
                field: field_name.to_string(),
                message: format!("row {i} has {} entries, expected {cols}", row.len()),
            });
        }
        for (j, cell) in row.iter().enumerate() {
            let s = match cell {
                Value::String(s) => field.parse(s)?,
                Value::Number(n) => {
                    if let Some(k) = n.as_i64() {
                        field.from_i64(k)
                    } else {
                        return Err(schema(field_name, "non-integer numeric entry"));
                    }
                }
                _ => return Err(schema(field_name, "entries must be strings or integers")),
            };
            if !field.is_zero(&s) {
                m.set(i, j, s);
            }
        }
    }
    Ok(m)
}

/// Renders a matrix as the wire object.
pub fn mat_to_json(field: Field, m: &Mat) -> Value {
    let _ = field;
    serde_json::json!({
        "rows": m.rows,
        "cols": m.cols,
        "entries": m.render_entries(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        let text = r#"{
            "category": {"kind": "braided_vec", "field": {"kind": "Q"}},
            "atoms": {"A": 2},
            "carrier": {"atom": "A"},
            "monoid": {
                "mu": {"rows": 3, "cols": 3, "entries": [["1","0","0"],["0","1","0"],["0","0","1"]]},
                "eta": {"rows": 2, "cols": 1, "entries": [["1"],["0"]]}
            },
            "comonoid": {
                "delta": {"rows": 4, "cols": 2, "entries": [["1","0"],["0","0"],["0","0"],["0","1"]]},
                "eps": {"rows": 1, "cols": 2, "entries": [["1","1"]]}
            }
        }"#;
        match parse_definition(text, None) {
            Err(Error::DimensionError { field, .. }) => assert_eq!(field, "monoid.mu"),
            other => panic!("expected DimensionError, got {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_file() {
        match parse_definition("", None) {
            Err(Error::ParseError { location }) => assert!(location.contains("line 1")),
            other => panic!("expected ParseError, got {other:?}"),
        }
    }
}

fn parse_field(v: Option<&Value>) -> Result<Field, Error> {
    match v {
        None => Ok(Field::Q),
        Some(f) => match f.get("kind").and_then(|k| k.as_str()) {
            Some("Q") => Ok(Field::Q),
            Some("GFp") => {
                let p = f
                    .get("p")
                    .and_then(|p| p.as_u64())
                    .ok_or_else(|| schema("category.field.p", "missing"))?;
                Ok(Field::Fp(p))
            }
            _ => Err(schema("category.field.kind", "must be Q or GFp")),
        },
    }
}
