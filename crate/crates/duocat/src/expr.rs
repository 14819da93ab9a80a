//! Formal object expressions over the two monoidal products.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Which of the two monoidal products a node carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Product {
    Circ,
    Bullet,
}

impl Product {
    pub fn flip(self) -> Product {
        match self {
            Product::Circ => Product::Bullet,
            Product::Bullet => Product::Circ,
        }
    }
}

/// Binary expression tree naming every object in a diagram. Leaves are the
/// two monoidal units and named atoms; internal nodes are tagged with the
/// product they take.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ObjExpr {
    UnitI,
    UnitJ,
    Atom(Arc<str>),
    Node(Product, Arc<ObjExpr>, Arc<ObjExpr>),
}

pub use ObjExpr::{UnitI, UnitJ};

impl ObjExpr {
    pub fn atom(name: &str) -> ObjExpr {
        ObjExpr::Atom(Arc::from(name))
    }

    pub fn node(p: Product, l: ObjExpr, r: ObjExpr) -> ObjExpr {
        ObjExpr::Node(p, Arc::new(l), Arc::new(r))
    }

    /// `self ∘ rhs`
    pub fn c(&self, rhs: &ObjExpr) -> ObjExpr {
        ObjExpr::node(Product::Circ, self.clone(), rhs.clone())
    }

    /// `self • rhs`
    pub fn b(&self, rhs: &ObjExpr) -> ObjExpr {
        ObjExpr::node(Product::Bullet, self.clone(), rhs.clone())
    }

    pub fn unit(p: Product) -> ObjExpr {
        match p {
            Product::Circ => UnitI,
            Product::Bullet => UnitJ,
        }
    }

    pub fn is_unit_of(&self, p: Product) -> bool {
        *self == ObjExpr::unit(p)
    }

    /// Serializes in the wire shape: `["circ", l, r]`, `["bullet", l, r]`,
    /// `"I"`, `"J"`, `{"atom": name}`.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            UnitI => json!("I"),
            UnitJ => json!("J"),
            ObjExpr::Atom(a) => json!({ "atom": a.as_ref() }),
            ObjExpr::Node(Product::Circ, l, r) => json!(["circ", l.to_json(), r.to_json()]),
            ObjExpr::Node(Product::Bullet, l, r) => json!(["bullet", l.to_json(), r.to_json()]),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ObjExpr, Error> {
        match v {
            serde_json::Value::String(s) if s == "I" => Ok(UnitI),
            serde_json::Value::String(s) if s == "J" => Ok(UnitJ),
            serde_json::Value::Object(m) => match m.get("atom") {
                Some(serde_json::Value::String(name)) => Ok(ObjExpr::atom(name)),
                _ => Err(Error::SchemaError {
                    field: "object expression".into(),
                    message: "object must be \"I\", \"J\", {\"atom\":name} or a tagged pair".into(),
                }),
            },
            serde_json::Value::Array(items) if items.len() == 3 => {
                let tag = items[0].as_str().unwrap_or("");
                let p = match tag {
                    "circ" => Product::Circ,
                    "bullet" => Product::Bullet,
                    _ => {
                        return Err(Error::SchemaError {
                            field: "object expression".into(),
                            message: format!("unknown product tag '{tag}'"),
                        })
                    }
                };
                Ok(ObjExpr::node(
                    p,
                    ObjExpr::from_json(&items[1])?,
                    ObjExpr::from_json(&items[2])?,
                ))
            }
            _ => Err(Error::SchemaError {
                field: "object expression".into(),
                message: "malformed object expression".into(),
            }),
        }
    }
}

impl fmt::Display for ObjExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitI => write!(f, "I"),
            UnitJ => write!(f, "J"),
            ObjExpr::Atom(a) => write!(f, "{a}"),
            ObjExpr::Node(p, l, r) => {
                let op = match p {
                    Product::Circ => "o",
                    Product::Bullet => "*",
                };
                let wrap = |e: &ObjExpr, f: &mut fmt::Formatter<'_>| -> fmt::Result {
                    match e {
                        ObjExpr::Node(..) => write!(f, "({e})"),
                        _ => write!(f, "{e}"),
                    }
                };
                wrap(l, f)?;
                write!(f, " {op} ")?;
                wrap(r, f)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let a = ObjExpr::atom("A");
        let e = UnitI.b(&a).c(&a.b(&UnitJ));
        let v = e.to_json();
        assert_eq!(ObjExpr::from_json(&v).unwrap(), e);
        assert_eq!(
            v,
            serde_json::json!(["circ", ["bullet", "I", {"atom":"A"}], ["bullet", {"atom":"A"}, "J"]])
        );
    }
}
