//! Concrete duoidal instances over exact fields.
//!
//! One realization engine covers both built-in instances: objects are
//! group-graded spaces (the braided instance is the trivially graded case),
//! the first product is the convolution (Cauchy) product
//! `(V o W)_x = ⊕_{hk=x} V_h ⊗ W_k` with unit `I` concentrated at the group
//! identity, the second is the gradewise (Hadamard) product
//! `(V * W)_x = V_x ⊗ W_x` with unit `J` one-dimensional in every grade.
//!
//! The three duality transforms are carried as a state on the instance:
//! expressions written against a transformed instance are mapped back to
//! base syntax for realization, and morphism matrices are transposed when
//! the transform passes through the opposite category.
//!
//! Index conventions are fixed so serialized fixtures are portable: tensor
//! factors flatten left-factor-major, convolution summands `(h, k)` order
//! lexicographically in the declared group-element order.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Error;
use crate::expr::{ObjExpr, Product};
use crate::field::Field;
use crate::group::GroupTable;
use crate::matrix::Mat;

/// Per-grade dimensions of a realized object (one entry for the braided
/// instance).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dims(pub Vec<usize>);

impl Dims {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.0.len());
        let mut acc = 0;
        for d in &self.0 {
            off.push(acc);
            acc += d;
        }
        off
    }
}

/// One of the three duality transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// Reverse the first monoidal product.
    CircOp,
    /// Reverse the second monoidal product.
    BulletOp,
    /// Swap the two products and pass to the opposite category.
    Star,
}

/// Composite transform state. `star` flags the opposite category;
/// `rev_first`/`rev_second` flag reversal of the current first/second
/// product relative to the base instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TransformState {
    pub star: bool,
    pub rev_first: bool,
    pub rev_second: bool,
}

impl TransformState {
    pub fn apply(self, t: Transform) -> TransformState {
        match t {
            Transform::CircOp => TransformState {
                rev_first: !self.rev_first,
                ..self
            },
            Transform::BulletOp => TransformState {
                rev_second: !self.rev_second,
                ..self
            },
            Transform::Star => TransformState {
                star: !self.star,
                rev_first: self.rev_second,
                rev_second: self.rev_first,
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.star && !self.rev_first && !self.rev_second
    }
}

/// Replacement structure maps, applied at the base orientation. The
/// built-in instances derive their maps from the grading; an override
/// produces a candidate category whose axioms [`crate::duoidal`] will
/// judge rather than presume.
#[derive(Debug, Clone, Default)]
pub struct UnitOverrides {
    pub delta: Option<Mat>,
    pub varpi: Option<Mat>,
    pub tau: Option<Mat>,
}

/// A concrete duoidal category: field, grading group, atom table and the
/// transform state. Instances are immutable; extension and transformation
/// return new values.
#[derive(Debug, Clone)]
pub struct DuoidalInstance {
    field: Field,
    group: Arc<GroupTable>,
    atoms: BTreeMap<Arc<str>, Arc<Vec<usize>>>,
    state: TransformState,
    overrides: Arc<UnitOverrides>,
}

/// Braided vector spaces over the field: both products Kronecker, both
/// units one-dimensional, interchange the middle-four swap.
pub fn make_braided_vec(field: Field) -> DuoidalInstance {
    DuoidalInstance {
        field,
        group: Arc::new(GroupTable::trivial()),
        atoms: BTreeMap::new(),
        state: TransformState::default(),
        overrides: Arc::new(UnitOverrides::default()),
    }
}

/// Group-graded vector spaces with the convolution and Hadamard products.
pub fn make_graded_vec(group: GroupTable, field: Field) -> DuoidalInstance {
    DuoidalInstance {
        field,
        group: Arc::new(group),
        atoms: BTreeMap::new(),
        state: TransformState::default(),
        overrides: Arc::new(UnitOverrides::default()),
    }
}

impl DuoidalInstance {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn state(&self) -> TransformState {
        self.state
    }

    pub fn atom_names(&self) -> Vec<String> {
        self.atoms.keys().map(|k| k.to_string()).collect()
    }

    pub fn atom_dims(&self, name: &str) -> Option<Dims> {
        self.atoms.get(name).map(|d| Dims(d.as_ref().clone()))
    }

    /// Registers a new atom (per-grade dimensions). Used both for declared
    /// objects and for retracts produced by idempotent splittings.
    pub fn with_atom(&self, name: &str, dims: Vec<usize>) -> Result<DuoidalInstance, Error> {
        if dims.len() != self.group.order() {
            return Err(Error::DimensionError {
                field: name.to_string(),
                message: format!(
                    "atom has {} grade dimensions, group has order {}",
                    dims.len(),
                    self.group.order()
                ),
            });
        }
        let mut atoms = self.atoms.clone();
        atoms.insert(Arc::from(name), Arc::new(dims));
        Ok(DuoidalInstance {
            atoms,
            ..self.clone()
        })
    }

    /// One of the three duality transforms; an involution on each generator.
    pub fn transform(&self, t: Transform) -> DuoidalInstance {
        DuoidalInstance {
            state: self.state.apply(t),
            ..self.clone()
        }
    }

    pub fn with_state(&self, state: TransformState) -> DuoidalInstance {
        DuoidalInstance {
            state,
            ..self.clone()
        }
    }

    /// Replaces unit structure maps at the base orientation.
    pub fn with_unit_overrides(&self, overrides: UnitOverrides) -> DuoidalInstance {
        DuoidalInstance {
            overrides: Arc::new(overrides),
            ..self.clone()
        }
    }

    pub(crate) fn overrides(&self) -> &UnitOverrides {
        &self.overrides
    }

    /// Maps an expression written against this (possibly transformed)
    /// instance to base syntax.
    pub fn to_base(&self, e: &ObjExpr) -> ObjExpr {
        if self.state.is_identity() {
            return e.clone();
        }
        let s = self.state;
        match e {
            ObjExpr::UnitI => {
                if s.star {
                    ObjExpr::UnitJ
                } else {
                    ObjExpr::UnitI
                }
            }
            ObjExpr::UnitJ => {
                if s.star {
                    ObjExpr::UnitI
                } else {
                    ObjExpr::UnitJ
                }
            }
            ObjExpr::Atom(_) => e.clone(),
            ObjExpr::Node(p, l, r) => {
                let (base_p, rev) = match p {
                    Product::Circ => (
                        if s.star { Product::Bullet } else { Product::Circ },
                        s.rev_first,
                    ),
                    Product::Bullet => (
                        if s.star { Product::Circ } else { Product::Bullet },
                        s.rev_second,
                    ),
                };
                let lb = self.to_base(l);
                let rb = self.to_base(r);
                if rev {
                    ObjExpr::node(base_p, rb, lb)
                } else {
                    ObjExpr::node(base_p, lb, rb)
                }
            }
        }
    }

    /// Inverse of [`DuoidalInstance::to_base`]: the expression in this
    /// instance's syntax whose base image is `e`.
    pub fn from_base(&self, e: &ObjExpr) -> ObjExpr {
        if self.state.is_identity() {
            return e.clone();
        }
        let s = self.state;
        match e {
            ObjExpr::UnitI => {
                if s.star {
                    ObjExpr::UnitJ
                } else {
                    ObjExpr::UnitI
                }
            }
            ObjExpr::UnitJ => {
                if s.star {
                    ObjExpr::UnitI
                } else {
                    ObjExpr::UnitJ
                }
            }
            ObjExpr::Atom(_) => e.clone(),
            ObjExpr::Node(base_p, l, r) => {
                // which product of this syntax maps onto base_p
                let (p, rev) = match (s.star, base_p) {
                    (false, Product::Circ) | (true, Product::Bullet) => {
                        (Product::Circ, s.rev_first)
                    }
                    (false, Product::Bullet) | (true, Product::Circ) => {
                        (Product::Bullet, s.rev_second)
                    }
                };
                let lb = self.from_base(l);
                let rb = self.from_base(r);
                if rev {
                    ObjExpr::node(p, rb, lb)
                } else {
                    ObjExpr::node(p, lb, rb)
                }
            }
        }
    }

    /// Total and per-grade dimensions of an expression.
    pub fn realize(&self, e: &ObjExpr) -> Result<Dims, Error> {
        self.base_realize(&self.to_base(e))
    }

    pub(crate) fn base_realize(&self, e: &ObjExpr) -> Result<Dims, Error> {
        let n = self.group.order();
        match e {
            ObjExpr::UnitI => {
                let mut d = vec![0; n];
                d[self.group.identity] = 1;
                Ok(Dims(d))
            }
            ObjExpr::UnitJ => Ok(Dims(vec![1; n])),
            ObjExpr::Atom(name) => self
                .atoms
                .get(name.as_ref())
                .map(|d| Dims(d.as_ref().clone()))
                .ok_or_else(|| Error::UnknownAtom(name.to_string())),
            ObjExpr::Node(Product::Circ, l, r) => {
                let (dl, dr) = (self.base_realize(l)?, self.base_realize(r)?);
                let mut d = vec![0; n];
                for h in 0..n {
                    for k in 0..n {
                        d[self.group.mul(h, k)] += dl.0[h] * dr.0[k];
                    }
                }
                Ok(Dims(d))
            }
            ObjExpr::Node(Product::Bullet, l, r) => {
                let (dl, dr) = (self.base_realize(l)?, self.base_realize(r)?);
                Ok(Dims((0..n).map(|x| dl.0[x] * dr.0[x]).collect()))
            }
        }
    }
}

/// Index bookkeeping for a convolution product of two graded objects.
pub(crate) struct CircLayout {
    pub grade_offset: Vec<usize>,
    /// per grade: (h, k, offset within the grade), lexicographic in (h, k)
    pub summands: Vec<Vec<(usize, usize, usize)>>,
    pub dims: Dims,
}

impl CircLayout {
    pub fn new(group: &GroupTable, dl: &Dims, dr: &Dims) -> CircLayout {
        let n = group.order();
        let mut summands = vec![Vec::new(); n];
        for h in 0..n {
            for k in 0..n {
                summands[group.mul(h, k)].push((h, k));
            }
        }
        let mut dims = vec![0; n];
        let mut laid = Vec::with_capacity(n);
        for (x, pairs) in summands.iter().enumerate() {
            let mut acc = 0usize;
            let mut out = Vec::with_capacity(pairs.len());
            for &(h, k) in pairs {
                out.push((h, k, acc));
                acc += dl.0[h] * dr.0[k];
            }
            dims[x] = acc;
            laid.push(out);
        }
        let dims = Dims(dims);
        CircLayout {
            grade_offset: dims.offsets(),
            summands: laid,
            dims,
        }
    }

    pub fn summand_offset(&self, grade: usize, h: usize, k: usize) -> usize {
        for &(h2, k2, off) in &self.summands[grade] {
            if h2 == h && k2 == k {
                return self.grade_offset[grade] + off;
            }
        }
        panic!("summand ({h},{k}) not in grade {grade}");
    }
}

pub(crate) struct BulletLayout {
    pub grade_offset: Vec<usize>,
    #[allow(dead_code)]
    pub left: Dims,
    pub right: Dims,
    pub dims: Dims,
}

impl BulletLayout {
    pub fn new(dl: &Dims, dr: &Dims) -> BulletLayout {
        let dims = Dims(
            dl.0.iter()
                .zip(dr.0.iter())
                .map(|(a, b)| a * b)
                .collect(),
        );
        BulletLayout {
            grade_offset: dims.offsets(),
            left: dl.clone(),
            right: dr.clone(),
            dims,
        }
    }

    pub fn index(&self, grade: usize, i: usize, j: usize) -> usize {
        self.grade_offset[grade] + i * self.right.0[grade] + j
    }
}

/// Extracts the per-grade block of a grade-preserving matrix.
pub(crate) fn grade_block(
    mat: &Mat,
    cod_off: &[usize],
    cod_dims: &Dims,
    dom_off: &[usize],
    dom_dims: &Dims,
    grade: usize,
) -> Mat {
    let r0 = cod_off[grade];
    let c0 = dom_off[grade];
    let mut out = Mat::zero(mat.field, cod_dims.0[grade], dom_dims.0[grade]);
    for i in 0..cod_dims.0[grade] {
        for (j, v) in mat.row(r0 + i) {
            let j = *j as usize;
            if j >= c0 && j < c0 + dom_dims.0[grade] {
                out.set(i, j - c0, v.clone());
            }
        }
    }
    out
}

/// Checks that a matrix between two graded objects has no cross-grade
/// entries.
pub(crate) fn is_grade_preserving(mat: &Mat, cod: &Dims, dom: &Dims) -> bool {
    let cod_off = cod.offsets();
    let dom_off = dom.offsets();
    let grade_of = |idx: usize, off: &[usize], dims: &Dims| -> usize {
        let mut g = 0;
        for (x, &o) in off.iter().enumerate() {
            if idx >= o && idx < o + dims.0[x] {
                g = x;
                break;
            }
        }
        g
    };
    for i in 0..mat.rows {
        let gi = grade_of(i, &cod_off, cod);
        for (j, _) in mat.row(i) {
            if grade_of(*j as usize, &dom_off, dom) != gi {
                return false;
            }
        }
    }
    true
}
