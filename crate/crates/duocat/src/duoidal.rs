//! The duoidal-axiom verifier.
//!
//! Axioms quantify over all objects, so exhaustive checking is impossible;
//! the probe tuples evaluated here are the contract. Default probes draw
//! from every declared atom plus the two units, capped by a dimension
//! budget so the six-object associativity diagrams stay small.

use rand::SeedableRng;

use crate::error::Error;
use crate::expr::{ObjExpr, Product};
use crate::instance::DuoidalInstance;
use crate::morph::{chain, Morph};
use crate::report::{compare_diagram, compare_to_identity, CheckReport};

const DIM_BUDGET: usize = 64;
const MAX_TUPLES: usize = 24;
const PROBE_SEED: u64 = 0x00d1_2ca7;

fn fmt_tuple(t: &[ObjExpr]) -> String {
    let parts: Vec<String> = t.iter().map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Enumerates tuples over the pool whose total-dimension product stays
/// under budget, in lexicographic pool order.
fn probe_tuples(
    inst: &DuoidalInstance,
    pool: &[ObjExpr],
    arity: usize,
) -> Result<Vec<Vec<ObjExpr>>, Error> {
    let dims: Vec<usize> = pool
        .iter()
        .map(|e| inst.realize(e).map(|d| d.total().max(1)))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; arity];
    loop {
        let prod: usize = idx.iter().map(|&i| dims[i]).product();
        if prod <= DIM_BUDGET {
            out.push(idx.iter().map(|&i| pool[i].clone()).collect());
            if out.len() >= MAX_TUPLES {
                break;
            }
        }
        // increment mixed-radix counter from the right
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < pool.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
    Ok(out)
}

pub fn default_probe_pool(inst: &DuoidalInstance) -> Vec<ObjExpr> {
    let mut pool = vec![ObjExpr::UnitI, ObjExpr::UnitJ];
    for name in inst.atom_names() {
        pool.push(ObjExpr::atom(&name));
    }
    pool
}

/// Evaluates every duoidal axiom exactly on the probe pool: both
/// interchange associativity squares, the four unitality cells, the monoid
/// axioms of `(J, varpi, tau)`, the comonoid axioms of `(I, delta, tau)`,
/// the two unit-collapse triangles, and naturality of the interchange
/// against seeded random morphisms. Entries are sorted by diagram name.
pub fn check_duoidal(
    inst: &DuoidalInstance,
    pool: Option<&[ObjExpr]>,
) -> Result<CheckReport, Error> {
    let default_pool;
    let pool = match pool {
        Some(p) => p,
        None => {
            default_pool = default_probe_pool(inst);
            &default_pool
        }
    };
    let mut rep = CheckReport::new();
    units_monoid_comonoid(inst, &mut rep)?;
    let i = ObjExpr::UnitI;
    let j = ObjExpr::UnitJ;

    for t in probe_tuples(inst, pool, 6)? {
        let (a, b, c, d, e, f) = (&t[0], &t[1], &t[2], &t[3], &t[4], &t[5]);
        // first associativity square
        let lhs = chain(
            inst,
            &[
                inst.tensor_mor(Product::Circ, &inst.id_morph(&a.b(b))?, &inst.zeta(c, d, e, f)?)?,
                inst.zeta(a, b, &c.c(e), &d.c(f))?,
            ],
        )?;
        let rhs = chain(
            inst,
            &[
                inst.tensor_mor(Product::Circ, &inst.zeta(a, b, c, d)?, &inst.id_morph(&e.b(f))?)?,
                inst.zeta(&a.c(c), &b.c(d), e, f)?,
            ],
        )?;
        rep.push(compare_diagram(
            inst,
            &format!("assoc_interchange_circ{}", fmt_tuple(&t)),
            &lhs,
            &rhs,
        ));
        // second associativity square
        let lhs = chain(
            inst,
            &[
                inst.zeta(a, &b.b(c), d, &e.b(f))?,
                inst.tensor_mor(Product::Bullet, &inst.id_morph(&a.c(d))?, &inst.zeta(b, c, e, f)?)?,
            ],
        )?;
        let rhs = chain(
            inst,
            &[
                inst.zeta(&a.b(b), c, &d.b(e), f)?,
                inst.tensor_mor(Product::Bullet, &inst.zeta(a, b, d, e)?, &inst.id_morph(&c.c(f))?)?,
            ],
        )?;
        rep.push(compare_diagram(
            inst,
            &format!("assoc_interchange_bullet{}", fmt_tuple(&t)),
            &lhs,
            &rhs,
        ));
    }

    for t in probe_tuples(inst, pool, 2)? {
        let (a, b) = (&t[0], &t[1]);
        let ab_b = a.b(b);
        let ab_c = a.c(b);
        let tag = fmt_tuple(&t);
        // unitality of the interchange against delta
        let lhs = chain(
            inst,
            &[
                inst.tensor_mor(Product::Circ, &inst.delta()?, &inst.id_morph(&ab_b)?)?,
                inst.zeta(&i, &i, a, b)?,
            ],
        )?;
        rep.push(compare_to_identity(
            inst,
            &format!("unitality_delta_left{tag}"),
            &lhs,
            &ab_b,
        ));
        let lhs = chain(
            inst,
            &[
                inst.tensor_mor(Product::Circ, &inst.id_morph(&ab_b)?, &inst.delta()?)?,
                inst.zeta(a, b, &i, &i)?,
            ],
        )?;
        rep.push(compare_to_identity(
            inst,
            &format!("unitality_delta_right{tag}"),
            &lhs,
            &ab_b,
        ));
        // unitality against varpi
        let lhs = chain(
            inst,
            &[
                inst.zeta(&j, a, &j, b)?,
                inst.tensor_mor(Product::Bullet, &inst.varpi()?, &inst.id_morph(&ab_c)?)?,
            ],
        )?;
        rep.push(compare_to_identity(
            inst,
            &format!("unitality_varpi_left{tag}"),
            &lhs,
            &ab_c,
        ));
        let lhs = chain(
            inst,
            &[
                inst.zeta(a, &j, b, &j)?,
                inst.tensor_mor(Product::Bullet, &inst.id_morph(&ab_c)?, &inst.varpi()?)?,
            ],
        )?;
        rep.push(compare_to_identity(
            inst,
            &format!("unitality_varpi_right{tag}"),
            &lhs,
            &ab_c,
        ));
        // the interchange collapses on one-sided units
        let lhs = inst.zeta(a, &i, b, &j)?;
        let rhs = inst.tensor_mor(
            Product::Circ,
            &inst.tensor_mor(Product::Bullet, &inst.id_morph(a)?, &inst.tau()?)?,
            &inst.id_morph(b)?,
        )?;
        rep.push(compare_diagram(
            inst,
            &format!("coherence_triangle_right{tag}"),
            &lhs,
            &rhs,
        ));
        let lhs = inst.zeta(&i, a, &j, b)?;
        let rhs = inst.tensor_mor(
            Product::Circ,
            &inst.tensor_mor(Product::Bullet, &inst.tau()?, &inst.id_morph(a)?)?,
            &inst.id_morph(b)?,
        )?;
        rep.push(compare_diagram(
            inst,
            &format!("coherence_triangle_left{tag}"),
            &lhs,
            &rhs,
        ));
    }

    // naturality of the interchange in all four arguments
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let quads = probe_tuples(inst, pool, 4)?;
    for (n, t) in quads.iter().take(8).enumerate() {
        let targets = &quads[(n + 1) % quads.len()];
        let fs: Vec<Morph> = (0..4)
            .map(|k| inst.random_morph(&t[k], &targets[k], &mut rng))
            .collect::<Result<_, _>>()?;
        let lhs = chain(
            inst,
            &[
                inst.tensor_mor(
                    Product::Circ,
                    &inst.tensor_mor(Product::Bullet, &fs[0], &fs[1])?,
                    &inst.tensor_mor(Product::Bullet, &fs[2], &fs[3])?,
                )?,
                inst.zeta(&targets[0], &targets[1], &targets[2], &targets[3])?,
            ],
        )?;
        let rhs = chain(
            inst,
            &[
                inst.zeta(&t[0], &t[1], &t[2], &t[3])?,
                inst.tensor_mor(
                    Product::Bullet,
                    &inst.tensor_mor(Product::Circ, &fs[0], &fs[2])?,
                    &inst.tensor_mor(Product::Circ, &fs[1], &fs[3])?,
                )?,
            ],
        )?;
        rep.push(compare_diagram(
            inst,
            &format!("interchange_naturality{}", fmt_tuple(t)),
            &lhs,
            &rhs,
        ));
    }

    rep.sort_by_name();
    Ok(rep)
}

fn units_monoid_comonoid(inst: &DuoidalInstance, rep: &mut CheckReport) -> Result<(), Error> {
    let i = ObjExpr::UnitI;
    let j = ObjExpr::UnitJ;
    let varpi = inst.varpi()?;
    let delta = inst.delta()?;
    let tau = inst.tau()?;
    let id_j = inst.id_morph(&j)?;
    let id_i = inst.id_morph(&i)?;

    let lhs = chain(
        inst,
        &[inst.tensor_mor(Product::Circ, &varpi, &id_j)?, varpi.clone()],
    )?;
    let rhs = chain(
        inst,
        &[inst.tensor_mor(Product::Circ, &id_j, &varpi)?, varpi.clone()],
    )?;
    rep.push(compare_diagram(inst, "monoid_J_assoc", &lhs, &rhs));

    let lhs = chain(
        inst,
        &[inst.tensor_mor(Product::Circ, &tau, &id_j)?, varpi.clone()],
    )?;
    rep.push(compare_to_identity(inst, "monoid_J_unit_left", &lhs, &j));
    let lhs = chain(
        inst,
        &[inst.tensor_mor(Product::Circ, &id_j, &tau)?, varpi.clone()],
    )?;
    rep.push(compare_to_identity(inst, "monoid_J_unit_right", &lhs, &j));

    let lhs = chain(
        inst,
        &[delta.clone(), inst.tensor_mor(Product::Bullet, &delta, &id_i)?],
    )?;
    let rhs = chain(
        inst,
        &[delta.clone(), inst.tensor_mor(Product::Bullet, &id_i, &delta)?],
    )?;
    rep.push(compare_diagram(inst, "comonoid_I_coassoc", &lhs, &rhs));

    let lhs = chain(
        inst,
        &[delta.clone(), inst.tensor_mor(Product::Bullet, &tau, &id_i)?],
    )?;
    rep.push(compare_to_identity(inst, "comonoid_I_counit_left", &lhs, &i));
    let lhs = chain(
        inst,
        &[delta.clone(), inst.tensor_mor(Product::Bullet, &id_i, &tau)?],
    )?;
    rep.push(compare_to_identity(inst, "comonoid_I_counit_right", &lhs, &i));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::GroupTable;
    use crate::instance::{make_braided_vec, make_graded_vec, Transform};

    #[test]
    fn braided_instance_satisfies_all_axioms() {
        let inst = make_braided_vec(Field::Q)
            .with_atom("A", vec![2])
            .unwrap()
            .with_atom("B", vec![3])
            .unwrap();
        let rep = check_duoidal(&inst, None).unwrap();
        assert!(rep.all_pass(), "failures: {:?}", failing(&rep));
        assert!(!rep.entries.is_empty());
    }

    #[test]
    fn graded_z2_satisfies_all_axioms() {
        let inst = make_graded_vec(GroupTable::cyclic(2), Field::Q)
            .with_atom("A", vec![1, 1])
            .unwrap();
        let rep = check_duoidal(&inst, None).unwrap();
        assert!(rep.all_pass(), "failures: {:?}", failing(&rep));
    }

    #[test]
    fn transforms_preserve_the_verdict() {
        let inst = make_graded_vec(GroupTable::cyclic(2), Field::Q);
        for t in [Transform::CircOp, Transform::BulletOp, Transform::Star] {
            let rep = check_duoidal(&inst.transform(t), None).unwrap();
            assert!(rep.all_pass(), "{t:?} failures: {:?}", failing(&rep));
        }
        let rep = check_duoidal(
            &inst.transform(Transform::Star).transform(Transform::CircOp),
            None,
        )
        .unwrap();
        assert!(rep.all_pass(), "star.circ failures: {:?}", failing(&rep));
    }

    fn failing(rep: &CheckReport) -> Vec<String> {
        rep.entries
            .iter()
            .filter(|e| e.status == crate::report::Status::Fail)
            .map(|e| e.name.clone())
            .collect()
    }
}
