//! Verification pipelines: dispatches the section checks in dependency
//! order, short-circuiting sections whose prerequisites failed, and
//! assembles a deterministic machine- or human-readable report.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bases::{bar_isos, bimodule_isos, AModule, BasesCtx, Variant};
use crate::bimonoid::{
    check_all_axioms, check_comonoid, check_kappa_properties, check_monoid, classify,
    Classification,
};
use crate::defs::Definition;
use crate::duoidal::check_duoidal;
use crate::error::Error;
use crate::expr::ObjExpr;
use crate::hopf::{
    check_hopf_module, check_omega, check_weak_mdl, default_probes, free_hopf_module,
    fundamental_check, self_hopf_module, theta_l, HopfCtx, IComodule,
};
use crate::report::{CheckEntry, CheckReport, Status};
use crate::wbm::{check_chi, check_section3, check_weak_bimonad};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    CheckCategory,
    CheckBimonoid,
    Bases,
    Hopf,
    All,
}

impl Command {
    pub fn parse(s: &str) -> Option<Command> {
        match s {
            "check-category" => Some(Command::CheckCategory),
            "check-bimonoid" => Some(Command::CheckBimonoid),
            "bases" => Some(Command::Bases),
            "hopf" => Some(Command::Hopf),
            "all" => Some(Command::All),
            _ => None,
        }
    }

    fn sections(&self) -> &'static [&'static str] {
        match self {
            Command::CheckCategory => &["duoidal"],
            Command::CheckBimonoid => &["monoid", "comonoid", "axioms", "classification"],
            Command::Bases => &[
                "monoid",
                "comonoid",
                "axioms",
                "classification",
                "bases",
                "frobenius",
                "prop4",
            ],
            Command::Hopf => &[
                "monoid",
                "comonoid",
                "axioms",
                "classification",
                "psi",
                "hopf",
                "fundamental",
            ],
            Command::All => &[
                "duoidal",
                "monoid",
                "comonoid",
                "axioms",
                "classification",
                "bases",
                "frobenius",
                "prop4",
                "section3",
                "wbm",
                "psi",
                "hopf",
                "fundamental",
            ],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub name: String,
    pub entries: Vec<CheckEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub digest: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn any_fail(&self) -> bool {
        self.sections
            .iter()
            .any(|s| s.entries.iter().any(|e| e.status == Status::Fail))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("duocat {} digest={}\n", self.version, self.digest));
        for s in &self.sections {
            for e in &s.entries {
                let st = match e.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                out.push_str(&format!("{}/{}: {}", s.name, e.name, st));
                if let Some(w) = &e.witness {
                    out.push_str(&format!(" [witness={}]", w.basis_index));
                }
                if let Some(v) = &e.value {
                    out.push_str(&format!(" [{v}]"));
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }
}

fn skip_section(name: &str, reason: &str) -> Section {
    Section {
        name: name.to_string(),
        entries: vec![CheckEntry::skip("section", reason)],
    }
}

fn error_section(name: &str, err: &Error) -> Section {
    Section {
        name: name.to_string(),
        entries: vec![CheckEntry {
            name: "section".into(),
            status: Status::Fail,
            witness: None,
            value: Some(format!("error: {err}")),
            dims: None,
        }],
    }
}

/// Runs a command over a loaded definition. Returns the exit code and the
/// report: 0 when every executed section passes, 1 on structural failure.
/// (Input errors surface before this as exit 2.)
pub fn run(cmd: Command, def: &Definition, input_bytes: &[u8]) -> (i32, Report) {
    let digest = hex(&Sha256::digest(input_bytes));
    let mut sections: Vec<Section> = Vec::new();
    let wanted = cmd.sections();
    let inst = &def.inst;
    let probes_pool: Option<&[ObjExpr]> = def.probes.as_deref();

    let mut monoid_ok = None;
    let mut label: Option<Classification> = None;

    for &name in wanted {
        let section = match name {
            "duoidal" => match check_duoidal(inst, probes_pool) {
                Ok(rep) => Section {
                    name: name.into(),
                    entries: rep.entries,
                },
                Err(e) => error_section(name, &e),
            },
            "monoid" | "comonoid" => {
                let Some(d) = &def.data else {
                    sections.push(skip_section(name, "no structure data in the definition"));
                    continue;
                };
                let rep = if name == "monoid" {
                    check_monoid(inst, d)
                } else {
                    check_comonoid(inst, d)
                };
                match rep {
                    Ok(rep) => {
                        let ok = rep.all_pass();
                        monoid_ok = Some(monoid_ok.unwrap_or(true) && ok);
                        Section {
                            name: name.into(),
                            entries: rep.rename(|n| strip_prefix(n, name)).entries,
                        }
                    }
                    Err(e) => error_section(name, &e),
                }
            }
            _ => {
                let Some(d) = &def.data else {
                    sections.push(skip_section(name, "no structure data in the definition"));
                    continue;
                };
                if monoid_ok == Some(false) {
                    sections.push(skip_section(name, "monoid or comonoid laws failed"));
                    continue;
                }
                let probe_objs: Vec<ObjExpr> = match probes_pool {
                    Some(p) => p.to_vec(),
                    None => vec![ObjExpr::UnitI, ObjExpr::UnitJ, d.carrier.clone()],
                };
                match name {
                    "axioms" => match check_all_axioms(inst, d) {
                        Ok(rep) => Section {
                            name: name.into(),
                            entries: rep.rename(|n| strip_prefix(n, "axiom")).entries,
                        },
                        Err(e) => error_section(name, &e),
                    },
                    "classification" => match classify(inst, d) {
                        Ok((lab, rep)) => {
                            label = Some(lab);
                            // the strict-compatibility outcomes are evidence
                            // for the label, not structural failures
                            let mut entries =
                                vec![CheckEntry::pass("label").with_value(lab.as_str())];
                            for e in rep.entries.iter().filter(|e| e.name.starts_with("strict/")) {
                                let verdict = match e.status {
                                    Status::Pass => "holds".to_string(),
                                    _ => match &e.witness {
                                        Some(w) => format!("fails at basis {}", w.basis_index),
                                        None => "fails".to_string(),
                                    },
                                };
                                entries.push(
                                    CheckEntry::pass(strip_prefix(&e.name, "strict"))
                                        .with_value(verdict),
                                );
                            }
                            Section {
                                name: name.into(),
                                entries,
                            }
                        }
                        Err(e) => error_section(name, &e),
                    },
                    "bases" | "frobenius" => {
                        let lab = label_or_classify(inst, d, &mut label);
                        let variants: &[Variant] = if lab.is_weak() {
                            &Variant::ALL
                        } else if lab.is_right_weak() {
                            &Variant::ALL[..4]
                        } else {
                            sections.push(skip_section(
                                name,
                                "data is not a right weak bimonoid",
                            ));
                            continue;
                        };
                        match BasesCtx::build(inst, d, variants) {
                            Ok(ctx) => {
                                if name == "bases" {
                                    let entries = ctx
                                        .bases
                                        .iter()
                                        .map(|(v, b, _)| {
                                            CheckEntry::pass(v.label())
                                                .with_value(format!(
                                                    "dim {}",
                                                    b.part.dims.total()
                                                ))
                                                .with_dims(b.part.dims.0.clone())
                                        })
                                        .collect();
                                    Section {
                                        name: name.into(),
                                        entries,
                                    }
                                } else {
                                    Section {
                                        name: name.into(),
                                        entries: ctx.report.entries,
                                    }
                                }
                            }
                            Err(e) => error_section(name, &e),
                        }
                    }
                    "prop4" => {
                        let lab = label_or_classify(inst, d, &mut label);
                        if !lab.is_weak() {
                            sections.push(skip_section(name, "data is not a weak bimonoid"));
                            continue;
                        }
                        let out = BasesCtx::build(inst, d, &Variant::ALL)
                            .and_then(|ctx| {
                                let mut rep = bar_isos(&ctx)?;
                                rep.extend(bimodule_isos(inst, d)?);
                                Ok(rep)
                            });
                        match out {
                            Ok(rep) => Section {
                                name: name.into(),
                                entries: rep.entries,
                            },
                            Err(e) => error_section(name, &e),
                        }
                    }
                    "section3" => {
                        let lab = label_or_classify(inst, d, &mut label);
                        if !lab.is_right_weak() {
                            sections.push(skip_section(
                                name,
                                "data is not a right weak bimonoid",
                            ));
                            continue;
                        }
                        let out = BasesCtx::build(inst, d, &[Variant::RCirc]).and_then(|ctx| {
                            let (rc, frob) = ctx.get(Variant::RCirc).expect("built");
                            let mut rep = check_section3(&ctx.inst, d, rc, frob)?;
                            rep.extend(check_chi(&ctx.inst, d, rc)?);
                            Ok(rep)
                        });
                        match out {
                            Ok(rep) => Section {
                                name: name.into(),
                                entries: rep.entries,
                            },
                            Err(e) => error_section(name, &e),
                        }
                    }
                    "wbm" => {
                        let out = check_weak_bimonad(inst, d, &probe_objs).and_then(|mut rep| {
                            rep.extend(check_kappa_properties(inst, d, &probe_objs)?);
                            Ok(rep)
                        });
                        match out {
                            Ok(rep) => Section {
                                name: name.into(),
                                entries: rep.entries,
                            },
                            Err(e) => error_section(name, &e),
                        }
                    }
                    "psi" => match check_weak_mdl(inst, d, &probe_objs) {
                        Ok(rep) => Section {
                            name: name.into(),
                            entries: rep.entries,
                        },
                        Err(e) => error_section(name, &e),
                    },
                    "hopf" => {
                        let mut rep = CheckReport::new();
                        match check_hopf_module(inst, d, &self_hopf_module(d)) {
                            Ok(r) => rep.extend(r),
                            Err(e) => {
                                sections.push(error_section(name, &e));
                                continue;
                            }
                        }
                        if let Ok(z) = IComodule::trivial(inst) {
                            match free_hopf_module(inst, d, &z)
                                .and_then(|hm| check_hopf_module(inst, d, &hm))
                            {
                                Ok(r) => rep.extend(r),
                                Err(e) => rep.push(CheckEntry {
                                    name: "free_hopf_module".into(),
                                    status: Status::Fail,
                                    witness: None,
                                    value: Some(e.to_string()),
                                    dims: None,
                                }),
                            }
                        }
                        for hm in &def.hopf_modules {
                            match check_hopf_module(inst, d, hm) {
                                Ok(r) => rep.extend(r),
                                Err(e) => rep.push(CheckEntry {
                                    name: format!("hopf[{}]", hm.name),
                                    status: Status::Fail,
                                    witness: None,
                                    value: Some(e.to_string()),
                                    dims: None,
                                }),
                            }
                        }
                        let lab = label_or_classify(inst, d, &mut label);
                        if lab.is_weak() {
                            match HopfCtx::build(inst, d) {
                                Ok(ctx) => {
                                    match theta_l(&ctx, d) {
                                        Ok((_, r)) => rep.extend(r),
                                        Err(e) => rep.push(fail_entry("theta_L", &e)),
                                    }
                                    match check_omega(&ctx, d) {
                                        Ok(r) => rep.extend(r),
                                        Err(e) => rep.push(fail_entry("omega", &e)),
                                    }
                                }
                                Err(e) => rep.push(fail_entry("base_objects", &e)),
                            }
                        } else {
                            rep.push(CheckEntry::skip(
                                "comparison",
                                "data is not a weak bimonoid",
                            ));
                        }
                        Section {
                            name: name.into(),
                            entries: rep.entries,
                        }
                    }
                    "fundamental" => {
                        let lab = label_or_classify(inst, d, &mut label);
                        if !lab.is_weak() {
                            sections.push(skip_section(name, "data is not a weak bimonoid"));
                            continue;
                        }
                        let out = HopfCtx::build(inst, d).and_then(|ctx| {
                            let mut probes = default_probes(&ctx.inst, d)?;
                            for (mname, carrier, gamma) in &def.modules {
                                match AModule::new(&ctx.inst, d, mname, carrier.clone(), gamma.clone()) {
                                    Ok(m) => probes.push(m),
                                    Err(e) => {
                                        return Err(e);
                                    }
                                }
                            }
                            fundamental_check(&ctx, d, &probes)
                        });
                        match out {
                            Ok(outcome) => {
                                let mut entries = outcome.report.entries;
                                let verdict = if outcome.galois_on_probes {
                                    "galois-on-probes (certifies the listed probes only)"
                                } else {
                                    "not galois on the listed probes"
                                };
                                entries.push(
                                    CheckEntry {
                                        name: "summary".into(),
                                        status: if outcome.galois_on_probes {
                                            Status::Pass
                                        } else {
                                            Status::Fail
                                        },
                                        witness: None,
                                        value: Some(verdict.into()),
                                        dims: None,
                                    },
                                );
                                Section {
                                    name: name.into(),
                                    entries,
                                }
                            }
                            Err(e) => error_section(name, &e),
                        }
                    }
                    other => skip_section(other, "unknown section"),
                }
            }
        };
        sections.push(section);
    }

    let report = Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        digest,
        sections,
    };
    let code = if report.any_fail() { 1 } else { 0 };
    (code, report)
}

fn label_or_classify(
    inst: &crate::instance::DuoidalInstance,
    d: &crate::bimonoid::WeakBimonoidData,
    label: &mut Option<Classification>,
) -> Classification {
    if let Some(l) = label {
        return *l;
    }
    let l = classify(inst, d)
        .map(|(l, _)| l)
        .unwrap_or(Classification::None);
    *label = Some(l);
    l
}

fn fail_entry(name: &str, e: &Error) -> CheckEntry {
    CheckEntry {
        name: name.to_string(),
        status: Status::Fail,
        witness: None,
        value: Some(e.to_string()),
        dims: None,
    }
}

fn strip_prefix(name: &str, prefix: &str) -> String {
    name.strip_prefix(prefix)
        .and_then(|n| n.strip_prefix('/'))
        .unwrap_or(name)
        .to_string()
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
