//! Property tests for the structural invariants: coherence path
//! independence, exactness of the linear algebra, and wire-format round
//! trips.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use duocat::expr::Product;
use duocat::{make_braided_vec, make_graded_vec, Field, GroupTable, Mat, ObjExpr};

fn braided() -> duocat::DuoidalInstance {
    make_braided_vec(Field::Q)
        .with_atom("A", vec![2])
        .unwrap()
        .with_atom("B", vec![3])
        .unwrap()
}

fn graded() -> duocat::DuoidalInstance {
    make_graded_vec(GroupTable::cyclic(2), Field::Q)
        .with_atom("A", vec![1, 1])
        .unwrap()
        .with_atom("B", vec![2, 0])
        .unwrap()
}

/// Random expression of bounded depth over two atoms and both units.
fn random_expr(rng: &mut ChaCha8Rng, depth: usize) -> ObjExpr {
    if depth == 0 || rng.gen_bool(0.35) {
        match rng.gen_range(0..4) {
            0 => ObjExpr::UnitI,
            1 => ObjExpr::UnitJ,
            2 => ObjExpr::atom("A"),
            _ => ObjExpr::atom("B"),
        }
    } else {
        let p = if rng.gen_bool(0.5) {
            Product::Circ
        } else {
            Product::Bullet
        };
        ObjExpr::node(
            p,
            random_expr(rng, depth - 1),
            random_expr(rng, depth - 1),
        )
    }
}

/// Applies random coherence-preserving rewrites: associativity rotations
/// and unit insertions/removals.
fn mutate(rng: &mut ChaCha8Rng, e: &ObjExpr, steps: usize) -> ObjExpr {
    let mut cur = e.clone();
    for _ in 0..steps {
        cur = mutate_once(rng, &cur);
    }
    cur
}

fn mutate_once(rng: &mut ChaCha8Rng, e: &ObjExpr) -> ObjExpr {
    match rng.gen_range(0..5) {
        // insert a unit on the left or right for a random product
        0 => {
            let p = if rng.gen_bool(0.5) {
                Product::Circ
            } else {
                Product::Bullet
            };
            if rng.gen_bool(0.5) {
                ObjExpr::node(p, ObjExpr::unit(p), e.clone())
            } else {
                ObjExpr::node(p, e.clone(), ObjExpr::unit(p))
            }
        }
        _ => match e {
            ObjExpr::Node(p, l, r) => {
                // rotate when the shape allows, otherwise recurse
                if let ObjExpr::Node(p2, a, b) = l.as_ref() {
                    if p2 == p && rng.gen_bool(0.5) {
                        return ObjExpr::node(
                            *p,
                            a.as_ref().clone(),
                            ObjExpr::node(*p, b.as_ref().clone(), r.as_ref().clone()),
                        );
                    }
                }
                if l.is_unit_of(*p) && rng.gen_bool(0.5) {
                    return r.as_ref().clone();
                }
                if r.is_unit_of(*p) && rng.gen_bool(0.5) {
                    return l.as_ref().clone();
                }
                if rng.gen_bool(0.5) {
                    ObjExpr::node(*p, mutate_once(rng, l), r.as_ref().clone())
                } else {
                    ObjExpr::node(*p, l.as_ref().clone(), mutate_once(rng, r))
                }
            }
            _ => e.clone(),
        },
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Any two chains of coherence isos between the same endpoints agree,
    /// and each iso is exactly inverted by its reverse.
    #[test]
    fn coherence_is_path_independent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for inst in [braided(), graded()] {
            let x = random_expr(&mut rng, 4);
            let y = mutate(&mut rng, &x, 3);
            let z = mutate(&mut rng, &y, 3);
            let xy = inst.coherence_iso(&x, &y).unwrap();
            let yx = inst.coherence_iso(&y, &x).unwrap();
            let round = xy.mat.mul(&yx.mat).unwrap();
            prop_assert!(round.is_identity());
            let yz = inst.coherence_iso(&y, &z).unwrap();
            let xz = inst.coherence_iso(&x, &z).unwrap();
            let composed = yz.mat.mul(&xy.mat).unwrap();
            prop_assert_eq!(composed, xz.mat);
        }
    }

    /// Tensoring commutes with composition for both products.
    #[test]
    fn tensor_interchange(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for inst in [braided(), graded()] {
            let objs = [ObjExpr::atom("A"), ObjExpr::atom("B"), ObjExpr::UnitJ];
            let pick = |rng: &mut ChaCha8Rng| objs[rng.gen_range(0..objs.len())].clone();
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let (u, v, w) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let f1 = inst.random_morph(&x, &y, &mut rng).unwrap();
            let f2 = inst.random_morph(&y, &z, &mut rng).unwrap();
            let g1 = inst.random_morph(&u, &v, &mut rng).unwrap();
            let g2 = inst.random_morph(&v, &w, &mut rng).unwrap();
            for p in [Product::Circ, Product::Bullet] {
                let lhs = inst
                    .tensor_mor(p, &inst.compose(&f2, &f1).unwrap(), &inst.compose(&g2, &g1).unwrap())
                    .unwrap();
                let rhs = inst
                    .compose(
                        &inst.tensor_mor(p, &f2, &g2).unwrap(),
                        &inst.tensor_mor(p, &f1, &g1).unwrap(),
                    )
                    .unwrap();
                prop_assert_eq!(lhs.mat, rhs.mat);
            }
        }
    }

    /// Expression transport between transformed instances is invertible.
    #[test]
    fn base_transport_round_trips(seed in any::<u64>(), star in any::<bool>(), r1 in any::<bool>(), r2 in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = graded().with_state(duocat::instance::TransformState {
            star,
            rev_first: r1,
            rev_second: r2,
        });
        let e = random_expr(&mut rng, 4);
        prop_assert_eq!(inst.from_base(&inst.to_base(&e)), e.clone());
        prop_assert_eq!(inst.to_base(&inst.from_base(&e)), e);
    }

    /// `c . r = m` for every matrix, with full column/row rank factors.
    #[test]
    fn rank_factorization_round_trip(rows in 0usize..6, cols in 0usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Field::Q;
        let m = Mat::from_fn(f, rows, cols, |_, _| f.from_i64(rng.gen_range(-3..=3)));
        let (c, r) = m.rank_factorization();
        prop_assert_eq!(c.mul(&r).unwrap(), m.clone());
        prop_assert_eq!(c.rank(), c.cols);
        prop_assert_eq!(r.rank(), r.rows);
    }

    /// Scalar wire-format round trip, over the rationals and a prime field.
    #[test]
    fn scalar_round_trip(n in -1000i64..1000, d in 1i64..60) {
        let f = Field::Q;
        let s = f.parse(&format!("{n}/{d}")).unwrap();
        let back = f.parse(&f.render(&s)).unwrap();
        prop_assert_eq!(s, back);
        let fp = Field::Fp(13);
        let s = fp.from_i64(n);
        let back = fp.parse(&fp.render(&s)).unwrap();
        prop_assert_eq!(s, back);
    }

    /// Object expressions survive the wire format.
    #[test]
    fn objexpr_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expr(&mut rng, 4);
        prop_assert_eq!(ObjExpr::from_json(&e.to_json()).unwrap(), e);
    }
}

#[test]
fn matrix_wire_format_round_trips() {
    let f = Field::Q;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = Mat::from_fn(f, 3, 4, |_, _| f.from_i64(rng.gen_range(-5..=5)));
    let v = duocat::defs::mat_to_json(f, &m);
    let back = duocat::defs::parse_mat(f, &v, "round_trip").unwrap();
    assert_eq!(m, back);
}
