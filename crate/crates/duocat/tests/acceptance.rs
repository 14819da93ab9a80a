//! Acceptance suite: one test per criterion, each printing a pass line on
//! success. Everything is exact (zero tolerance); fixture quantities were
//! established by independent hand computation before the build.

use duocat::bases::{bar_isos, bimodule_isos, AModule, BasesCtx, Variant};
use duocat::bimonoid::{
    check_axiom, check_comonoid, check_duality_closure, check_kappa_properties, check_monoid,
    classify, AxiomName, Classification,
};
use duocat::duoidal::check_duoidal;
use duocat::fixtures;
use duocat::hopf::{
    check_hopf_module, check_weak_mdl, comparison, default_probes, free_hopf_module,
    fundamental_check, self_hopf_module, theta_l, BetaVerdict, HopfCtx, IComodule, LModule,
};
use duocat::matrix::{Inverse, Mat};
use duocat::report::{CheckReport, Status};
use duocat::wbm::{check_section3, check_weak_bimonad};
use duocat::{make_braided_vec, make_graded_vec, Field, GroupTable, ObjExpr};

fn failing(rep: &CheckReport) -> Vec<String> {
    rep.entries
        .iter()
        .filter(|e| e.status == Status::Fail)
        .map(|e| e.name.clone())
        .collect()
}

fn probes(d: &duocat::bimonoid::WeakBimonoidData) -> Vec<ObjExpr> {
    vec![ObjExpr::UnitI, ObjExpr::UnitJ, d.carrier.clone()]
}

#[test]
fn criterion_01_duoidal_axioms_on_builtin_instances() {
    let t0 = std::time::Instant::now();
    let braided = make_braided_vec(Field::Q)
        .with_atom("X2", vec![2])
        .unwrap()
        .with_atom("X3", vec![3])
        .unwrap();
    let rep = check_duoidal(&braided, None).unwrap();
    assert!(rep.all_pass(), "braided: {:?}", failing(&rep));
    for order in [2usize, 3] {
        let inst = make_graded_vec(GroupTable::cyclic(order), Field::Q)
            .with_atom("A", vec![1; order])
            .unwrap();
        let rep = check_duoidal(&inst, None).unwrap();
        assert!(rep.all_pass(), "graded Z{order}: {:?}", failing(&rep));
    }
    let secs = t0.elapsed().as_secs_f64();
    assert!(secs < 10.0, "duoidal checks took {secs:.1}s");
    println!("criterion 01: PASS (duoidal axioms, {secs:.2}s)");
}

#[test]
fn criterion_02_groupoid_algebra_classifies_weak() {
    let (inst, d) = fixtures::b2();
    let (label, rep) = classify(&inst, &d).unwrap();
    assert_eq!(label, Classification::Weak);
    for ax in AxiomName::ALL {
        assert_eq!(
            rep.status_of(&format!("axiom/{}", ax.as_str())),
            Some(Status::Pass),
            "{ax:?}"
        );
    }
    assert_eq!(rep.status_of("strict/unit_comult"), Some(Status::Fail));
    assert_eq!(rep.status_of("strict/counit_mult"), Some(Status::Fail));
    println!("criterion 02: PASS (B2 classifies weak, strict compatibilities fail)");
}

#[test]
fn criterion_03_groupoid_algebra_base_objects() {
    let (inst, d) = fixtures::b2();
    let ctx = BasesCtx::build(&inst, &d, &Variant::ALL).unwrap();
    for (v, b, _) in &ctx.bases {
        assert_eq!(b.part.dims.total(), 2, "{}", v.label());
        assert_eq!(
            b.forms_agree.status,
            Status::Pass,
            "two displayed idempotent forms differ for {}",
            v.label()
        );
    }
    // basis order e11, e12, e21, e22. The first-product right idempotent
    // collapses to 1_(1) eps(h 1_(2)): e_ij -> e_jj; the second-product
    // left one to eps(1_(1) h) 1_(2): e_ij -> e_ii.
    let f = Field::Q;
    let perm = |pairs: [(usize, usize); 4]| {
        let mut m = Mat::zero(f, 4, 4);
        for (col, row) in pairs {
            m.set(row, col, f.one());
        }
        m
    };
    let (rc, _) = ctx.get(Variant::RCirc).unwrap();
    assert_eq!(rc.part.idem.mat, perm([(0, 0), (1, 3), (2, 0), (3, 3)]));
    let (lb, _) = ctx.get(Variant::LBullet).unwrap();
    assert_eq!(lb.part.idem.mat, perm([(0, 0), (1, 0), (2, 3), (3, 3)]));
    // every Frobenius verification passed
    assert!(ctx.report.all_pass(), "{:?}", failing(&ctx.report));
    println!("criterion 03: PASS (B2 base objects: all dims 2, idempotent images match the hand Sweedler oracle, Frobenius laws verified)");
}

#[test]
fn criterion_04_group_algebra_galois_map() {
    let (inst, d) = fixtures::b1();
    let (label, _) = classify(&inst, &d).unwrap();
    assert_eq!(label, Classification::Bimonoid);
    let ctx = BasesCtx::build(&inst, &d, &Variant::ALL).unwrap();
    for (v, b, _) in &ctx.bases {
        assert_eq!(b.part.dims.total(), 1, "{}", v.label());
    }
    let hctx = HopfCtx::build(&inst, &d).unwrap();
    let cmp = comparison(&hctx, &d, &AModule::regular(&d)).unwrap();
    assert!(cmp.report.all_pass(), "{:?}", failing(&cmp.report));
    // a (x) b -> ab_(1) (x) b_(2): on the grouplike basis (1,1),(1,g),(g,1),(g,g)
    let f = Field::Q;
    let mut expect = Mat::zero(f, 4, 4);
    for (col, row) in [(0usize, 0usize), (1, 3), (2, 2), (3, 1)] {
        expect.set(row, col, f.one());
    }
    assert_eq!(cmp.beta.mat, expect);
    assert!(matches!(cmp.beta.mat.try_invert(), Inverse::Inverted(_)));
    println!("criterion 04: PASS (B1 bimonoid, base dims 1, Galois map is the stated permutation)");
}

#[test]
fn criterion_05_idempotent_bialgebra_fails_the_criterion() {
    let (inst, d) = fixtures::b3();
    let (label, _) = classify(&inst, &d).unwrap();
    assert_eq!(label, Classification::Bimonoid);
    let ctx = HopfCtx::build(&inst, &d).unwrap();
    let out = fundamental_check(&ctx, &d, &[AModule::regular(&d)]).unwrap();
    assert_eq!(
        out.per_probe[0].1,
        BetaVerdict::NotIso {
            kernel_dim: 1,
            cokernel_dim: 1
        }
    );
    println!("criterion 05: PASS (B3 regular probe: not_iso(1, 1))");
}

#[test]
fn criterion_06_groupoid_algebra_is_galois_on_probes() {
    let (inst, d) = fixtures::b2();
    let ctx = HopfCtx::build(&inst, &d).unwrap();
    let probes = default_probes(&ctx.inst, &d).unwrap();
    let out = fundamental_check(&ctx, &d, &probes).unwrap();
    assert!(out.galois_on_probes, "{:?}", out.per_probe);
    let cmp = comparison(&ctx, &d, &AModule::regular(&d)).unwrap();
    assert_eq!((cmp.beta.mat.rows, cmp.beta.mat.cols), (8, 8));
    let inv = match cmp.beta.mat.try_invert() {
        Inverse::Inverted(inv) => inv,
        other => panic!("expected an inverse, got {other:?}"),
    };
    assert!(inv.mul(&cmp.beta.mat).unwrap().is_identity());
    println!("criterion 06: PASS (B2 Galois on all default probes, 8x8 exact inverse)");
}

#[test]
fn criterion_07_graded_unit_bimonoid() {
    let (inst, d) = fixtures::g1();
    assert!(check_monoid(&inst, &d).unwrap().all_pass());
    assert!(check_comonoid(&inst, &d).unwrap().all_pass());
    let (label, _) = classify(&inst, &d).unwrap();
    assert_eq!(label, Classification::Bimonoid);
    let ctx = BasesCtx::build(&inst, &d, &[Variant::RCirc]).unwrap();
    let (rc, _) = ctx.get(Variant::RCirc).unwrap();
    assert_eq!(rc.part.dims.total(), 2);
    // a genuinely non-braided instance
    assert_eq!(inst.realize(&ObjExpr::UnitI).unwrap().total(), 1);
    assert_eq!(inst.realize(&ObjExpr::UnitJ).unwrap().total(), 2);
    println!("criterion 07: PASS (G1 bimonoid on the graded instance, first-product base has dim 2)");
}

#[test]
fn criterion_08_negative_fixtures() {
    // broken counit: witness is the second basis vector (e12)
    let (inst, d) = fixtures::n1();
    let rep = check_comonoid(&inst, &d).unwrap();
    let e = rep.get("comonoid/counit_left").unwrap();
    assert_eq!(e.status, Status::Fail);
    assert_eq!(e.witness.as_ref().unwrap().basis_index, 1);

    // primitive comultiplication: comultiplicativity fails at g (x) g
    let (inst, d) = fixtures::n2();
    let e = check_axiom(&inst, &d, AxiomName::WB).unwrap();
    assert_eq!(e.status, Status::Fail);
    assert_eq!(e.witness.as_ref().unwrap().basis_index, 3);

    // the distributive-law compatibilities fail on the counit side (the
    // unit side only needs the weak-unit axioms, which this fixture
    // satisfies); the multiplication square fails as well
    let rep = check_weak_mdl(&inst, &d, &probes(&d)).unwrap();
    let fails = failing(&rep);
    assert!(fails.iter().any(|n| n.starts_with("psi/counit")), "{fails:?}");
    assert!(
        fails.iter().any(|n| n.starts_with("psi/multiplication")),
        "{fails:?}"
    );

    // exit codes are covered by the CLI integration tests on the same
    // fixture files
    println!("criterion 08: PASS (N1 counit witness e12, N2 comultiplicativity witness g(x)g, distributive-law failures)");
}

#[test]
fn criterion_09_splitting_property_suite() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let f = Field::Q;
    for trial in 0..100 {
        let n = rng.gen_range(1..=8usize);
        let r = rng.gen_range(0..=n);
        // random invertible p = unit lower . unit upper keeps exact inverses cheap
        let mut lower = Mat::identity(f, n);
        let mut upper = Mat::identity(f, n);
        for i in 0..n {
            for j in 0..n {
                let v: i64 = rng.gen_range(-3..=3);
                if v != 0 && i > j {
                    lower.set(i, j, f.from_i64(v));
                }
                let w: i64 = rng.gen_range(-3..=3);
                if w != 0 && i < j {
                    upper.set(i, j, f.from_i64(w));
                }
            }
        }
        let p = lower.mul(&upper).unwrap();
        let p_inv = match p.try_invert() {
            Inverse::Inverted(inv) => inv,
            _ => unreachable!("unit triangular products are invertible"),
        };
        let mut diag = Mat::zero(f, n, n);
        for k in 0..r {
            diag.set(k, k, f.one());
        }
        let e = p.mul(&diag).unwrap().mul(&p_inv).unwrap();
        let s = e.split_idempotent().unwrap_or_else(|err| {
            panic!("trial {trial}: {err}");
        });
        assert_eq!(s.retract_dim, r);
        assert_eq!(s.iota.mul(&s.pi).unwrap(), e);
        assert!(s.pi.mul(&s.iota).unwrap().is_identity());
        let complement = Mat::identity(f, n).sub(&e).unwrap();
        let s2 = complement.split_idempotent().unwrap();
        assert_eq!(s.retract_dim + s2.retract_dim, n);
    }
    println!("criterion 09: PASS (100 random idempotents split exactly)");
}

#[test]
fn criterion_10_duality_closure_on_b2() {
    let (inst, d) = fixtures::b2();
    let rep = check_duality_closure(&inst, &d).unwrap();
    assert!(rep.all_pass(), "{:?}", failing(&rep));
    assert!(rep.entries.len() >= 24);
    println!("criterion 10: PASS (every transformation-graph edge confirmed on B2)");
}

#[test]
fn criterion_11_kappa_suite() {
    for (name, (inst, d)) in [("b2", fixtures::b2()), ("b1", fixtures::b1())] {
        let rep = check_kappa_properties(&inst, &d, &probes(&d)).unwrap();
        assert!(rep.all_pass(), "{name}: {:?}", failing(&rep));
    }
    let (inst, d) = fixtures::n2();
    let rep = check_kappa_properties(&inst, &d, &[ObjExpr::UnitI, d.carrier.clone()]).unwrap();
    let absorb = rep
        .entries
        .iter()
        .find(|e| e.name.starts_with("kappa/absorb_comult") && e.status == Status::Fail)
        .expect("the comultiplication-absorption square must fail on N2");
    assert!(absorb.witness.is_some());
    println!("criterion 11: PASS (kappa properties on B1/B2, absorption failure with witness on N2)");
}

#[test]
fn criterion_12_section3_and_weak_bimonad_suites() {
    for (name, (inst, d)) in [
        ("b1", fixtures::b1()),
        ("b2", fixtures::b2()),
        ("g1", fixtures::g1()),
    ] {
        let ctx = BasesCtx::build(&inst, &d, &[Variant::RCirc]).unwrap();
        let (rc, frob) = ctx.get(Variant::RCirc).unwrap();
        let rep = check_section3(&ctx.inst, &d, rc, frob).unwrap();
        assert!(rep.all_pass(), "{name} section3: {:?}", failing(&rep));
        let rep = check_weak_bimonad(&inst, &d, &probes(&d)).unwrap();
        assert!(rep.all_pass(), "{name} wbm: {:?}", failing(&rep));
    }
    println!("criterion 12: PASS (retract lemmas and bimonad characterization on B1/B2/G1)");
}

#[test]
fn criterion_13_hopf_module_suite() {
    for (name, (inst, d)) in [("b1", fixtures::b1()), ("b2", fixtures::b2())] {
        let rep = check_hopf_module(&inst, &d, &self_hopf_module(&d)).unwrap();
        assert!(rep.all_pass(), "{name} self: {:?}", failing(&rep));
        let z = IComodule::trivial(&inst).unwrap();
        let free = free_hopf_module(&inst, &d, &z).unwrap();
        let rep = check_hopf_module(&inst, &d, &free).unwrap();
        assert!(rep.all_pass(), "{name} free: {:?}", failing(&rep));
    }
    // the fork equality and the factorization identity with the carrier as
    // a module over the second-product base
    let (inst, d) = fixtures::b2();
    let ctx = HopfCtx::build(&inst, &d).unwrap();
    let omega = duocat::hopf::omega_and_action(&ctx, &d).unwrap().0;
    let xi = duocat::chain(
        &ctx.inst,
        &[
            ctx.inst
                .tensor_mor(
                    duocat::Product::Circ,
                    &ctx.inst.id_morph(&d.carrier).unwrap(),
                    &omega,
                )
                .unwrap(),
            d.mu.clone(),
        ],
    )
    .unwrap();
    let p = LModule {
        name: "carrier".into(),
        carrier: d.carrier.clone(),
        xi,
    };
    let out = duocat::hopf::lambda(&ctx, &d, &p, "#acc13").unwrap();
    assert!(out.report.all_pass(), "{:?}", failing(&out.report));
    assert!(out
        .report
        .entries
        .iter()
        .any(|e| e.name == "lambda[carrier]/fork"));
    assert!(out
        .report
        .entries
        .iter()
        .any(|e| e.name == "lambda[carrier]/factorization"));
    let (_, theta_rep) = theta_l(&ctx, &d).unwrap();
    assert!(theta_rep.all_pass(), "{:?}", failing(&theta_rep));
    println!("criterion 13: PASS (Hopf modules, fork equality and comparison factorization on B2)");
}

#[test]
fn criterion_14_pairwise_and_bimodule_isomorphisms() {
    for (name, (inst, d)) in [
        ("b1", fixtures::b1()),
        ("b2", fixtures::b2()),
        ("g1", fixtures::g1()),
    ] {
        let ctx = BasesCtx::build(&inst, &d, &Variant::ALL).unwrap();
        let rep = bar_isos(&ctx).unwrap();
        assert!(rep.all_pass(), "{name} bars: {:?}", failing(&rep));
        let rep = bimodule_isos(&inst, &d).unwrap();
        assert!(rep.all_pass(), "{name} bimodule isos: {:?}", failing(&rep));
        for k in 1..=8 {
            assert!(rep
                .entries
                .iter()
                .any(|e| e.name.starts_with(&format!("bimodule{k}/"))));
        }
    }
    println!("criterion 14: PASS (pairwise isos and all eight bimodule isos on B1/B2/G1)");
}
