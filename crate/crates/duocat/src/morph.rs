//! Morphisms, tensoring, and the coherence elaborator.
//!
//! A [`Morph`] pairs a matrix with formal domain/codomain expressions. The
//! elaborator supplies the associators and unitors the diagrams leave
//! implicit: any two expressions with the same normal form are connected by
//! a canonical invertible morphism, and [`chain`] inserts those isos at
//! every junction of a composite.

use crate::error::Error;
use crate::expr::{ObjExpr, Product};
use crate::instance::{
    grade_block, is_grade_preserving, BulletLayout, CircLayout, Dims, DuoidalInstance,
};
use crate::matrix::Mat;

/// A realized morphism between two formal objects.
#[derive(Debug, Clone, PartialEq)]
pub struct Morph {
    pub dom: ObjExpr,
    pub cod: ObjExpr,
    pub mat: Mat,
}

/// Morphism in base syntax (internal to the transform plumbing).
#[derive(Debug, Clone)]
struct BaseMorph {
    dom: ObjExpr,
    cod: ObjExpr,
    mat: Mat,
}

impl Mat {
    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| {
            let r = self.row(i);
            r.len() == 1 && r[0].0 as usize == i && self.field.is_one(&r[0].1)
        })
    }
}

impl DuoidalInstance {
    pub fn id_morph(&self, e: &ObjExpr) -> Result<Morph, Error> {
        let d = self.realize(e)?;
        Ok(Morph {
            dom: e.clone(),
            cod: e.clone(),
            mat: Mat::identity(self.field(), d.total()),
        })
    }

    /// Strict composition `g . f`; domains must match structurally.
    pub fn compose(&self, g: &Morph, f: &Morph) -> Result<Morph, Error> {
        if f.cod != g.dom {
            return Err(Error::CompositionMismatch {
                context: format!("cod {} vs dom {}", f.cod, g.dom),
            });
        }
        Ok(Morph {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            mat: g.mat.mul(&f.mat)?,
        })
    }

    /// Wraps a raw matrix, validating dimensions and grade preservation.
    pub fn morph_from_mat(&self, dom: &ObjExpr, cod: &ObjExpr, mat: Mat) -> Result<Morph, Error> {
        let dd = self.realize(dom)?;
        let dc = self.realize(cod)?;
        if mat.rows != dc.total() || mat.cols != dd.total() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "matrix {}x{} for {} -> {} (expected {}x{})",
                    mat.rows,
                    mat.cols,
                    dom,
                    cod,
                    dc.total(),
                    dd.total()
                ),
            });
        }
        if !is_grade_preserving(&mat, &dc, &dd) {
            return Err(Error::DimensionMismatch {
                context: format!("matrix for {dom} -> {cod} mixes grades"),
            });
        }
        Ok(Morph {
            dom: dom.clone(),
            cod: cod.clone(),
            mat,
        })
    }

    fn morph_to_base(&self, f: &Morph) -> BaseMorph {
        if self.state().star {
            BaseMorph {
                dom: self.to_base(&f.cod),
                cod: self.to_base(&f.dom),
                mat: f.mat.transpose(),
            }
        } else {
            BaseMorph {
                dom: self.to_base(&f.dom),
                cod: self.to_base(&f.cod),
                mat: f.mat.clone(),
            }
        }
    }

    fn base_product(&self, p: Product) -> (Product, bool) {
        let s = self.state();
        match p {
            Product::Circ => (
                if s.star { Product::Bullet } else { Product::Circ },
                s.rev_first,
            ),
            Product::Bullet => (
                if s.star { Product::Circ } else { Product::Bullet },
                s.rev_second,
            ),
        }
    }

    /// Tensor product of morphisms under the chosen product.
    pub fn tensor_mor(&self, p: Product, f: &Morph, g: &Morph) -> Result<Morph, Error> {
        let dom = ObjExpr::node(p, f.dom.clone(), g.dom.clone());
        let cod = ObjExpr::node(p, f.cod.clone(), g.cod.clone());
        let fb = self.morph_to_base(f);
        let gb = self.morph_to_base(g);
        let (bp, rev) = self.base_product(p);
        let tb = if rev {
            self.base_tensor(bp, &gb, &fb)?
        } else {
            self.base_tensor(bp, &fb, &gb)?
        };
        let mat = if self.state().star {
            tb.mat.transpose()
        } else {
            tb.mat
        };
        Ok(Morph { dom, cod, mat })
    }

    /// n-ary tensor fold (left-nested expressions).
    pub fn tensor_many(&self, p: Product, parts: &[Morph]) -> Result<Morph, Error> {
        let mut acc = parts[0].clone();
        for part in &parts[1..] {
            acc = self.tensor_mor(p, &acc, part)?;
        }
        Ok(acc)
    }

    /// The interchange component `(A*B) o (C*D) -> (AoC) * (BoD)`.
    pub fn zeta(
        &self,
        a: &ObjExpr,
        b: &ObjExpr,
        c: &ObjExpr,
        d: &ObjExpr,
    ) -> Result<Morph, Error> {
        let dom = a.b(b).c(&c.b(d));
        let cod = a.c(c).b(&b.c(d));
        let dom_b = self.to_base(&dom);
        let cod_b = self.to_base(&cod);
        let zeta_src = if self.state().star { &cod_b } else { &dom_b };
        let (p, q, r, s) = match zeta_src {
            ObjExpr::Node(Product::Circ, l, r2) => match (l.as_ref(), r2.as_ref()) {
                (ObjExpr::Node(Product::Bullet, p, q), ObjExpr::Node(Product::Bullet, r, s)) => {
                    (p.as_ref(), q.as_ref(), r.as_ref(), s.as_ref())
                }
                _ => unreachable!("interchange source always has shape (.*.)o(.*.)"),
            },
            _ => unreachable!("interchange source always has shape (.*.)o(.*.)"),
        };
        let zb = self.base_zeta(p, q, r, s)?;
        let mat = if self.state().star {
            zb.mat.transpose()
        } else {
            zb.mat
        };
        Ok(Morph { dom, cod, mat })
    }

    /// Spec-facing name for the interchange component.
    pub fn interchange(
        &self,
        a: &ObjExpr,
        b: &ObjExpr,
        c: &ObjExpr,
        d: &ObjExpr,
    ) -> Result<Morph, Error> {
        self.zeta(a, b, c, d)
    }

    /// `delta : I -> I * I`
    pub fn delta(&self) -> Result<Morph, Error> {
        let dom = ObjExpr::UnitI;
        let cod = ObjExpr::UnitI.b(&ObjExpr::UnitI);
        let mat = if self.state().star {
            self.base_varpi()?.mat.transpose()
        } else {
            self.base_delta()?.mat
        };
        Ok(Morph { dom, cod, mat })
    }

    /// `varpi : J o J -> J`
    pub fn varpi(&self) -> Result<Morph, Error> {
        let dom = ObjExpr::UnitJ.c(&ObjExpr::UnitJ);
        let cod = ObjExpr::UnitJ;
        let mat = if self.state().star {
            self.base_delta()?.mat.transpose()
        } else {
            self.base_varpi()?.mat
        };
        Ok(Morph { dom, cod, mat })
    }

    /// `tau : I -> J`
    pub fn tau(&self) -> Result<Morph, Error> {
        let dom = ObjExpr::UnitI;
        let cod = ObjExpr::UnitJ;
        let mat = if self.state().star {
            self.base_tau()?.mat.transpose()
        } else {
            self.base_tau()?.mat
        };
        Ok(Morph { dom, cod, mat })
    }

    /// Canonical iso between coherence-related expressions: both sides are
    /// normalized (per-product flattening, unit deletion, right-combing)
    /// and the normalization morphisms composed. Errors with
    /// [`Error::LeafMismatch`] when the normal forms differ.
    pub fn coherence_iso(&self, src: &ObjExpr, dst: &ObjExpr) -> Result<Morph, Error> {
        if src == dst {
            return self.id_morph(src);
        }
        let sb = self.to_base(src);
        let db = self.to_base(dst);
        let (n1, m1) = self.normalize_base(&sb)?;
        let (n2, m2) = self.normalize_base(&db)?;
        if n1 != n2 {
            return Err(Error::LeafMismatch {
                src: src.to_string(),
                dst: dst.to_string(),
            });
        }
        // normalization morphisms are permutations, so transpose inverts
        let mat = m2.mat.transpose().mul(&m1.mat)?;
        Ok(Morph {
            dom: src.clone(),
            cod: dst.clone(),
            mat,
        })
    }

    // ---- base-world builders (state-independent) ----

    fn base_id(&self, e: &ObjExpr) -> Result<BaseMorph, Error> {
        let d = self.base_realize(e)?;
        Ok(BaseMorph {
            dom: e.clone(),
            cod: e.clone(),
            mat: Mat::identity(self.field(), d.total()),
        })
    }

    fn base_compose(&self, g: BaseMorph, f: BaseMorph) -> Result<BaseMorph, Error> {
        debug_assert_eq!(f.cod, g.dom, "base composition mismatch");
        Ok(BaseMorph {
            dom: f.dom,
            cod: g.cod,
            mat: g.mat.mul(&f.mat)?,
        })
    }

    fn base_tensor(&self, p: Product, f: &BaseMorph, g: &BaseMorph) -> Result<BaseMorph, Error> {
        let dom = ObjExpr::node(p, f.dom.clone(), g.dom.clone());
        let cod = ObjExpr::node(p, f.cod.clone(), g.cod.clone());
        if f.mat.is_identity() && g.mat.is_identity() {
            let d = self.base_realize(&dom)?;
            return Ok(BaseMorph {
                dom,
                cod,
                mat: Mat::identity(self.field(), d.total()),
            });
        }
        let n = self.group().order();
        let fd = self.base_realize(&f.dom)?;
        let fc = self.base_realize(&f.cod)?;
        let gd = self.base_realize(&g.dom)?;
        let gc = self.base_realize(&g.cod)?;
        let (fdo, fco, gdo, gco) = (fd.offsets(), fc.offsets(), gd.offsets(), gc.offsets());
        let fblk: Vec<Mat> = (0..n)
            .map(|x| grade_block(&f.mat, &fco, &fc, &fdo, &fd, x))
            .collect();
        let gblk: Vec<Mat> = (0..n)
            .map(|x| grade_block(&g.mat, &gco, &gc, &gdo, &gd, x))
            .collect();
        let field = self.field();
        let mat = match p {
            Product::Circ => {
                let ldom = CircLayout::new(self.group(), &fd, &gd);
                let lcod = CircLayout::new(self.group(), &fc, &gc);
                let mut out = Mat::zero(field, lcod.dims.total(), ldom.dims.total());
                for x in 0..n {
                    for &(h, k, off) in &ldom.summands[x] {
                        let (fb, gb) = (&fblk[h], &gblk[k]);
                        let dom0 = ldom.grade_offset[x] + off;
                        let cod0 = lcod.summand_offset(x, h, k);
                        place_kron(&mut out, field, fb, gb, cod0, dom0);
                    }
                }
                out
            }
            Product::Bullet => {
                let ldom = BulletLayout::new(&fd, &gd);
                let lcod = BulletLayout::new(&fc, &gc);
                let mut out = Mat::zero(field, lcod.dims.total(), ldom.dims.total());
                for x in 0..n {
                    place_kron(
                        &mut out,
                        field,
                        &fblk[x],
                        &gblk[x],
                        lcod.grade_offset[x],
                        ldom.grade_offset[x],
                    );
                }
                out
            }
        };
        Ok(BaseMorph { dom, cod, mat })
    }

    fn base_zeta(
        &self,
        a: &ObjExpr,
        b: &ObjExpr,
        c: &ObjExpr,
        d: &ObjExpr,
    ) -> Result<BaseMorph, Error> {
        let (da, db, dc, dd) = (
            self.base_realize(a)?,
            self.base_realize(b)?,
            self.base_realize(c)?,
            self.base_realize(d)?,
        );
        let dom = a.b(b).c(&c.b(d));
        let cod = a.c(c).b(&b.c(d));
        let n = self.group().order();
        let lab = BulletLayout::new(&da, &db);
        let lcd = BulletLayout::new(&dc, &dd);
        let ldom = CircLayout::new(self.group(), &lab.dims, &lcd.dims);
        let lac = CircLayout::new(self.group(), &da, &dc);
        let lbd = CircLayout::new(self.group(), &db, &dd);
        let lcod = BulletLayout::new(&lac.dims, &lbd.dims);
        let field = self.field();
        let one = field.one();
        let mut out = Mat::zero(field, lcod.dims.total(), ldom.dims.total());
        for x in 0..n {
            for &(h, k, off) in &ldom.summands[x] {
                let (na, nb, nc, nd) = (da.0[h], db.0[h], dc.0[k], dd.0[k]);
                for ai in 0..na {
                    for bi in 0..nb {
                        for ci in 0..nc {
                            for di in 0..nd {
                                let dom_idx = ldom.grade_offset[x]
                                    + off
                                    + (ai * nb + bi) * (nc * nd)
                                    + ci * nd
                                    + di;
                                let iac = lac.summand_offset(x, h, k) - lac.grade_offset[x]
                                    + ai * nc
                                    + ci;
                                let ibd = lbd.summand_offset(x, h, k) - lbd.grade_offset[x]
                                    + bi * nd
                                    + di;
                                let cod_idx = lcod.index(x, iac, ibd);
                                out.set(cod_idx, dom_idx, one.clone());
                            }
                        }
                    }
                }
            }
        }
        Ok(BaseMorph { dom, cod, mat: out })
    }

    fn base_delta(&self) -> Result<BaseMorph, Error> {
        let mat = match &self.overrides().delta {
            Some(m) => m.clone(),
            None => Mat::identity(self.field(), 1),
        };
        Ok(BaseMorph {
            dom: ObjExpr::UnitI,
            cod: ObjExpr::UnitI.b(&ObjExpr::UnitI),
            mat,
        })
    }

    fn base_varpi(&self) -> Result<BaseMorph, Error> {
        let mat = match &self.overrides().varpi {
            Some(m) => m.clone(),
            None => {
                let j = Dims(vec![1; self.group().order()]);
                let l = CircLayout::new(self.group(), &j, &j);
                let mut out = Mat::zero(self.field(), self.group().order(), l.dims.total());
                let one = self.field().one();
                for x in 0..self.group().order() {
                    for &(_, _, off) in &l.summands[x] {
                        out.set(x, l.grade_offset[x] + off, one.clone());
                    }
                }
                out
            }
        };
        Ok(BaseMorph {
            dom: ObjExpr::UnitJ.c(&ObjExpr::UnitJ),
            cod: ObjExpr::UnitJ,
            mat,
        })
    }

    fn base_tau(&self) -> Result<BaseMorph, Error> {
        let mat = match &self.overrides().tau {
            Some(m) => m.clone(),
            None => {
                let mut out = Mat::zero(self.field(), self.group().order(), 1);
                out.set(self.group().identity, 0, self.field().one());
                out
            }
        };
        Ok(BaseMorph {
            dom: ObjExpr::UnitI,
            cod: ObjExpr::UnitJ,
            mat,
        })
    }

    /// `(X o Y) o Z -> X o (Y o Z)`: reorders convolution summands from
    /// `((h.k), l)` order to `(h, (k.l))` order.
    fn base_assoc(
        &self,
        p: Product,
        x: &ObjExpr,
        y: &ObjExpr,
        z: &ObjExpr,
    ) -> Result<BaseMorph, Error> {
        let dom = ObjExpr::node(p, ObjExpr::node(p, x.clone(), y.clone()), z.clone());
        let cod = ObjExpr::node(p, x.clone(), ObjExpr::node(p, y.clone(), z.clone()));
        if p == Product::Bullet {
            // gradewise Kronecker is strictly associative
            let d = self.base_realize(&dom)?;
            return Ok(BaseMorph {
                dom,
                cod,
                mat: Mat::identity(self.field(), d.total()),
            });
        }
        let g = self.group();
        let n = g.order();
        let (dx, dy, dz) = (
            self.base_realize(x)?,
            self.base_realize(y)?,
            self.base_realize(z)?,
        );
        let lxy = CircLayout::new(g, &dx, &dy);
        let ldom = CircLayout::new(g, &lxy.dims, &dz);
        let lyz = CircLayout::new(g, &dy, &dz);
        let lcod = CircLayout::new(g, &dx, &lyz.dims);
        let field = self.field();
        let one = field.one();
        let mut out = Mat::zero(field, lcod.dims.total(), ldom.dims.total());
        for t in 0..n {
            for &(m, l, off_ml) in &ldom.summands[t] {
                for &(h, k, off_hk) in &lxy.summands[m] {
                    let ng = g.mul(k, l);
                    for i in 0..dx.0[h] {
                        for j in 0..dy.0[k] {
                            for w in 0..dz.0[l] {
                                let q = off_hk + i * dy.0[k] + j;
                                let dom_idx =
                                    ldom.grade_offset[t] + off_ml + q * dz.0[l] + w;
                                let q2 = lyz.summand_offset(ng, k, l) - lyz.grade_offset[ng]
                                    + j * dz.0[l]
                                    + w;
                                let cod_idx = lcod.summand_offset(t, h, ng)
                                    + i * lyz.dims.0[ng]
                                    + q2;
                                out.set(cod_idx, dom_idx, one.clone());
                            }
                        }
                    }
                }
            }
        }
        Ok(BaseMorph { dom, cod, mat: out })
    }

    fn base_unit_removal(&self, p: Product, left: bool, x: &ObjExpr) -> Result<BaseMorph, Error> {
        let u = ObjExpr::unit(p);
        let dom = if left {
            ObjExpr::node(p, u, x.clone())
        } else {
            ObjExpr::node(p, x.clone(), u)
        };
        let d = self.base_realize(&dom)?;
        debug_assert_eq!(d.total(), self.base_realize(x)?.total());
        Ok(BaseMorph {
            dom,
            cod: x.clone(),
            mat: Mat::identity(self.field(), d.total()),
        })
    }

    /// Normalizes an expression, returning the normal form and the
    /// (permutation) morphism into it.
    fn normalize_base(&self, e: &ObjExpr) -> Result<(ObjExpr, BaseMorph), Error> {
        match e {
            ObjExpr::Node(p, l, r) => {
                let (nl, ml) = self.normalize_base(l)?;
                let (nr, mr) = self.normalize_base(r)?;
                let m1 = self.base_tensor(*p, &ml, &mr)?;
                let t = ObjExpr::node(*p, nl, nr);
                let (factors, m2) = self.comb_morph(*p, &t)?;
                let nf = comb_expr(*p, &factors);
                Ok((nf, self.base_compose(m2, m1)?))
            }
            _ => Ok((e.clone(), self.base_id(e)?)),
        }
    }

    /// Flattens the maximal `p`-spine of `e`, dropping `p`-units, and builds
    /// the morphism onto the right-combed product of the factors.
    fn comb_morph(&self, p: Product, e: &ObjExpr) -> Result<(Vec<ObjExpr>, BaseMorph), Error> {
        if let ObjExpr::Node(p2, a, b) = e {
            if *p2 == p {
                let (fa, ma) = self.comb_morph(p, a)?;
                let (fb, mb) = self.comb_morph(p, b)?;
                let m = self.base_tensor(p, &ma, &mb)?;
                let mm = self.merge_combs(p, &fa, &fb)?;
                let mut factors = fa;
                factors.extend(fb);
                return Ok((factors, self.base_compose(mm, m)?));
            }
        }
        if e.is_unit_of(p) {
            Ok((Vec::new(), self.base_id(e)?))
        } else {
            Ok((vec![e.clone()], self.base_id(e)?))
        }
    }

    /// `comb(fa) p comb(fb) -> comb(fa ++ fb)` out of associators and unitors.
    fn merge_combs(
        &self,
        p: Product,
        fa: &[ObjExpr],
        fb: &[ObjExpr],
    ) -> Result<BaseMorph, Error> {
        if fa.is_empty() {
            return self.base_unit_removal(p, true, &comb_expr(p, fb));
        }
        if fb.is_empty() {
            return self.base_unit_removal(p, false, &comb_expr(p, fa));
        }
        if fa.len() == 1 {
            return self.base_id(&ObjExpr::node(p, fa[0].clone(), comb_expr(p, fb)));
        }
        let x = &fa[0];
        let rest = &fa[1..];
        let a1 = self.base_assoc(p, x, &comb_expr(p, rest), &comb_expr(p, fb))?;
        let m2 = self.merge_combs(p, rest, fb)?;
        let idx = self.base_id(x)?;
        let t = self.base_tensor(p, &idx, &m2)?;
        self.base_compose(t, a1)
    }

    /// Deterministic random morphism (per-grade blocks, entries in -2..=3).
    pub fn random_morph(
        &self,
        dom: &ObjExpr,
        cod: &ObjExpr,
        rng: &mut impl rand::Rng,
    ) -> Result<Morph, Error> {
        let dd = self.realize(dom)?;
        let dc = self.realize(cod)?;
        let (doff, coff) = (dd.offsets(), dc.offsets());
        let field = self.field();
        let mut mat = Mat::zero(field, dc.total(), dd.total());
        for x in 0..self.group().order() {
            for i in 0..dc.0[x] {
                for j in 0..dd.0[x] {
                    let v: i64 = rng.gen_range(-2..=3);
                    if v != 0 {
                        mat.set(coff[x] + i, doff[x] + j, field.from_i64(v));
                    }
                }
            }
        }
        Ok(Morph {
            dom: dom.clone(),
            cod: cod.clone(),
            mat,
        })
    }
}

fn place_kron(out: &mut Mat, field: crate::field::Field, f: &Mat, g: &Mat, cod0: usize, dom0: usize) {
    for i1 in 0..f.rows {
        for (j1, v1) in f.row(i1) {
            for i2 in 0..g.rows {
                for (j2, v2) in g.row(i2) {
                    out.set(
                        cod0 + i1 * g.rows + i2,
                        dom0 + *j1 as usize * g.cols + *j2 as usize,
                        field.mul(v1, v2),
                    );
                }
            }
        }
    }
}

pub(crate) fn comb_expr(p: Product, factors: &[ObjExpr]) -> ObjExpr {
    match factors {
        [] => ObjExpr::unit(p),
        [x] => x.clone(),
        [x, rest @ ..] => ObjExpr::node(p, x.clone(), comb_expr(p, rest)),
    }
}

/// Composes a sequence of morphisms left to right, inserting coherence isos
/// wherever consecutive cod/dom expressions differ but are
/// coherence-related.
pub fn chain(inst: &DuoidalInstance, steps: &[Morph]) -> Result<Morph, Error> {
    let mut acc = steps[0].clone();
    for s in &steps[1..] {
        if acc.cod != s.dom {
            let c = inst.coherence_iso(&acc.cod, &s.dom)?;
            acc = inst.compose(&c, &acc)?;
        }
        acc = inst.compose(s, &acc)?;
    }
    Ok(acc)
}


/// `chain` anchored at a starting expression: a coherence step is inserted
/// from `start` onto the first arrow's domain when they differ.
pub fn chain_from(
    inst: &DuoidalInstance,
    start: &ObjExpr,
    steps: &[Morph],
) -> Result<Morph, Error> {
    let mut all = vec![inst.id_morph(start)?];
    all.extend_from_slice(steps);
    chain(inst, &all)
}


/// `chain` anchored at both ends.
pub fn chain_between(
    inst: &DuoidalInstance,
    start: &ObjExpr,
    steps: &[Morph],
    end: &ObjExpr,
) -> Result<Morph, Error> {
    let mut all = vec![inst.id_morph(start)?];
    all.extend_from_slice(steps);
    all.push(inst.id_morph(end)?);
    chain(inst, &all)
}

/// `chain` followed by a final coherence step onto `end`.
pub fn chain_to(inst: &DuoidalInstance, steps: &[Morph], end: &ObjExpr) -> Result<Morph, Error> {
    let m = chain(inst, steps)?;
    if &m.cod == end {
        return Ok(m);
    }
    let c = inst.coherence_iso(&m.cod, end)?;
    inst.compose(&c, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::GroupTable;
    use crate::instance::{make_braided_vec, make_graded_vec};

    fn braided2() -> DuoidalInstance {
        make_braided_vec(Field::Q).with_atom("A", vec![2]).unwrap()
    }

    #[test]
    fn unitor_is_identity_in_braided() {
        let inst = braided2();
        let a = ObjExpr::atom("A");
        let m = inst.coherence_iso(&ObjExpr::UnitI.c(&a), &a).unwrap();
        assert!(m.mat.is_identity());
    }

    #[test]
    fn braided_zeta_is_middle_four_swap() {
        let inst = braided2();
        let a = ObjExpr::atom("A");
        let z = inst.zeta(&a, &a, &a, &a).unwrap();
        assert_eq!((z.mat.rows, z.mat.cols), (16, 16));
        // id2 (x) swap4 (x) id2 as an explicit permutation
        let f = Field::Q;
        let expect = Mat::from_fn(f, 16, 16, |i, j| {
            let (a1, b1, c1, d1) = (i >> 3 & 1, i >> 2 & 1, i >> 1 & 1, i & 1);
            // cod index order (a, c, b, d); dom order (a, b, c, d)
            let dom = (a1 << 3) | (c1 << 2) | (b1 << 1) | d1;
            if dom == j {
                f.one()
            } else {
                f.zero()
            }
        });
        assert_eq!(z.mat, expect);
    }

    #[test]
    fn graded_zeta_embeds_diagonally() {
        let inst = make_graded_vec(GroupTable::cyclic(2), Field::Q);
        let j = ObjExpr::UnitJ;
        let z = inst.zeta(&j, &j, &j, &j).unwrap();
        // (J*J)o(J*J) has dim 4, (JoJ)*(JoJ) has dim 8
        assert_eq!((z.mat.rows, z.mat.cols), (8, 4));
        assert_eq!(z.mat.rank(), 4);
    }

    #[test]
    fn graded_associator_is_a_permutation() {
        let inst = make_graded_vec(GroupTable::cyclic(2), Field::Q);
        let j = ObjExpr::UnitJ;
        let src = j.c(&j).c(&j);
        let dst = j.c(&j.c(&j));
        let m = inst.coherence_iso(&src, &dst).unwrap();
        assert_eq!((m.mat.rows, m.mat.cols), (8, 8));
        let back = inst.coherence_iso(&dst, &src).unwrap();
        let round = m.mat.mul(&back.mat).unwrap();
        assert!(round.is_identity());
    }

    #[test]
    fn coherence_rejects_unrelated() {
        let inst = braided2();
        let a = ObjExpr::atom("A");
        assert!(matches!(
            inst.coherence_iso(&a, &a.c(&a)),
            Err(Error::LeafMismatch { .. })
        ));
        // J o J is not coherence-related to J
        assert!(matches!(
            inst.coherence_iso(&ObjExpr::UnitJ.c(&ObjExpr::UnitJ), &ObjExpr::UnitJ),
            Err(Error::LeafMismatch { .. })
        ));
    }

    #[test]
    fn tensor_functoriality() {
        use rand::SeedableRng;
        let inst = braided2();
        let a = ObjExpr::atom("A");
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in [Product::Circ, Product::Bullet] {
            let f1 = inst.random_morph(&a, &a, &mut rng).unwrap();
            let f2 = inst.random_morph(&a, &a, &mut rng).unwrap();
            let g1 = inst.random_morph(&a, &a, &mut rng).unwrap();
            let g2 = inst.random_morph(&a, &a, &mut rng).unwrap();
            let lhs = inst
                .tensor_mor(p, &inst.compose(&f2, &f1).unwrap(), &inst.compose(&g2, &g1).unwrap())
                .unwrap();
            let t1 = inst.tensor_mor(p, &f1, &g1).unwrap();
            let t2 = inst.tensor_mor(p, &f2, &g2).unwrap();
            let rhs = inst.compose(&t2, &t1).unwrap();
            assert_eq!(lhs.mat, rhs.mat);
        }
    }

    #[test]
    fn scalar_tensor_example() {
        let inst = braided2();
        let a = ObjExpr::atom("A");
        let two = Morph {
            dom: ObjExpr::UnitI,
            cod: ObjExpr::UnitI,
            mat: Mat::from_dense_i64(Field::Q, &[vec![2]]),
        };
        let id_a = inst.id_morph(&a).unwrap();
        let t = inst.tensor_mor(Product::Circ, &two, &id_a).unwrap();
        assert_eq!(t.mat, Mat::from_dense_i64(Field::Q, &[vec![2, 0], vec![0, 2]]));
    }
}
