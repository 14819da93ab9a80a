//! Built-in example structures used by the test suites and shipped as JSON
//! fixtures: two honest weak bimonoids, a strict bimonoid whose Galois map
//! degenerates, and two deliberately broken candidates.

use crate::bimonoid::WeakBimonoidData;
use crate::expr::ObjExpr;
use crate::field::Field;
use crate::group::GroupTable;
use crate::instance::{make_braided_vec, make_graded_vec, DuoidalInstance};
use crate::matrix::Mat;

fn braided_with(dim: usize) -> DuoidalInstance {
    make_braided_vec(Field::Q).with_atom("A", vec![dim]).unwrap()
}

/// Group algebra of Z2 with grouplike comultiplication: a strict bimonoid
/// (in fact a Hopf algebra). Basis order (1, g).
pub fn b1() -> (DuoidalInstance, WeakBimonoidData) {
    let inst = braided_with(2);
    let f = Field::Q;
    let mu = Mat::from_dense_i64(f, &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]);
    let eta = Mat::from_dense_i64(f, &[vec![1], vec![0]]);
    let delta = Mat::from_dense_i64(f, &[vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 1]]);
    let eps = Mat::from_dense_i64(f, &[vec![1, 1]]);
    let d = WeakBimonoidData::new(&inst, ObjExpr::atom("A"), mu, eta, delta, eps).unwrap();
    (inst, d)
}

/// Groupoid algebra of the indiscrete two-object groupoid: the 2x2 matrix
/// units with entrywise comultiplication. Weak but not strict. Basis order
/// (e11, e12, e21, e22).
pub fn b2() -> (DuoidalInstance, WeakBimonoidData) {
    let inst = braided_with(4);
    let f = Field::Q;
    // mu(e_ij (x) e_kl) = [j=k] e_il
    let mut mu = Mat::zero(f, 4, 16);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    if j == k {
                        let col = (i * 2 + j) * 4 + (k * 2 + l);
                        mu.set(i * 2 + l, col, f.one());
                    }
                }
            }
        }
    }
    let eta = Mat::from_dense_i64(f, &[vec![1], vec![0], vec![0], vec![1]]);
    let mut delta = Mat::zero(f, 16, 4);
    for b in 0..4 {
        delta.set(b * 4 + b, b, f.one());
    }
    let eps = Mat::from_dense_i64(f, &[vec![1, 1, 1, 1]]);
    let d = WeakBimonoidData::new(&inst, ObjExpr::atom("A"), mu, eta, delta, eps).unwrap();
    (inst, d)
}

/// Monoid algebra of the idempotent monoid {1, e}: a strict bimonoid whose
/// fundamental-theorem comparison map is not invertible. Basis order (1, e).
pub fn b3() -> (DuoidalInstance, WeakBimonoidData) {
    let inst = braided_with(2);
    let f = Field::Q;
    let mu = Mat::from_dense_i64(f, &[vec![1, 0, 0, 0], vec![0, 1, 1, 1]]);
    let eta = Mat::from_dense_i64(f, &[vec![1], vec![0]]);
    let delta = Mat::from_dense_i64(f, &[vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 1]]);
    let eps = Mat::from_dense_i64(f, &[vec![1, 1]]);
    let d = WeakBimonoidData::new(&inst, ObjExpr::atom("A"), mu, eta, delta, eps).unwrap();
    (inst, d)
}

/// Broken counit: the groupoid algebra data with `eps(e_ij) = [i=j]`. The
/// comonoid counit law fails at e12.
pub fn n1() -> (DuoidalInstance, WeakBimonoidData) {
    let (inst, good) = b2();
    let f = Field::Q;
    let eps = Mat::from_dense_i64(f, &[vec![1, 0, 0, 1]]);
    let d = WeakBimonoidData::new(
        &inst,
        ObjExpr::atom("A"),
        good.mu.mat.clone(),
        good.eta.mat.clone(),
        good.delta.mat.clone(),
        eps,
    )
    .unwrap();
    (inst, d)
}

/// Primitive comultiplication on the Z2 group algebra: a valid monoid and
/// comonoid whose multiplication is not comultiplicative in characteristic
/// zero.
pub fn n2() -> (DuoidalInstance, WeakBimonoidData) {
    let inst = braided_with(2);
    let f = Field::Q;
    let mu = Mat::from_dense_i64(f, &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]);
    let eta = Mat::from_dense_i64(f, &[vec![1], vec![0]]);
    // delta(1) = 1(x)1, delta(g) = g(x)1 + 1(x)g
    let delta = Mat::from_dense_i64(f, &[vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 0]]);
    let eps = Mat::from_dense_i64(f, &[vec![1, 0]]);
    let d = WeakBimonoidData::new(&inst, ObjExpr::atom("A"), mu, eta, delta, eps).unwrap();
    (inst, d)
}

/// The unit object J of the Z2-graded instance with its monoid structure
/// `(J, varpi, tau)` and the canonical comonoid. A bimonoid carried by a
/// genuinely non-braided instance (dim I = 1, dim J = 2).
pub fn g1() -> (DuoidalInstance, WeakBimonoidData) {
    let inst = make_graded_vec(GroupTable::cyclic(2), Field::Q);
    let f = Field::Q;
    let carrier = ObjExpr::UnitJ;
    let mu = inst.varpi().unwrap().mat;
    let eta = inst.tau().unwrap().mat;
    let delta = Mat::identity(f, 2);
    let eps = Mat::identity(f, 2);
    let d = WeakBimonoidData::new(&inst, carrier, mu, eta, delta, eps).unwrap();
    (inst, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimonoid::{check_comonoid, check_monoid};

    #[test]
    fn all_fixtures_have_valid_monoids() {
        for (name, (inst, d)) in [
            ("b1", b1()),
            ("b2", b2()),
            ("b3", b3()),
            ("n1", n1()),
            ("n2", n2()),
            ("g1", g1()),
        ] {
            let rep = check_monoid(&inst, &d).unwrap();
            assert!(rep.all_pass(), "{name} monoid: {rep:?}");
        }
    }

    #[test]
    fn comonoids_valid_except_n1() {
        for (name, (inst, d)) in [("b1", b1()), ("b2", b2()), ("b3", b3()), ("n2", n2()), ("g1", g1())]
        {
            let rep = check_comonoid(&inst, &d).unwrap();
            assert!(rep.all_pass(), "{name} comonoid: {rep:?}");
        }
        let (inst, d) = n1();
        let rep = check_comonoid(&inst, &d).unwrap();
        assert!(rep.any_fail());
        // witness is e12, the second basis vector
        let e = rep.get("comonoid/counit_left").unwrap();
        assert_eq!(e.witness.as_ref().unwrap().basis_index, 1);
    }
}
