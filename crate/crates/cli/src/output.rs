//! Report shapes shared by the text and JSON output paths. Field order is
//! fixed by the struct declarations, so identical inputs produce
//! byte-identical JSON.

use std::fmt::Write as _;

use serde::Serialize;

use homleib_core::cohomology::ComplexReport;
use homleib_core::representation::{BimoduleReport, CompatibleBimoduleReport};
use homleib_core::scalar::format_scalar;
use homleib_core::structures::{CompatibilityReport, HomLeibnizReport, NijenhuisReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Serialize)]
pub struct WitnessOut {
    /// 1-based basis indices of the violating tuple.
    pub args: Vec<usize>,
    pub value: Vec<String>,
}

impl WitnessOut {
    pub fn from_core(w: &Witness) -> Self {
        WitnessOut {
            args: w.args.iter().map(|i| i + 1).collect(),
            value: w.value.iter().map(format_scalar).collect(),
        }
    }
}

fn witnesses_text(out: &mut String, label: &str, ws: &[WitnessOut]) {
    for w in ws {
        let args = w
            .args
            .iter()
            .map(|i| format!("e{i}"))
            .collect::<Vec<_>>()
            .join(", ");
        let value = w.value.join(", ");
        writeln!(out, "  {label} witness: ({args}) -> [{value}]").unwrap();
    }
}

#[derive(Serialize)]
pub struct BracketCheckOut {
    pub multiplicative: bool,
    pub identity: bool,
    pub violations: usize,
    pub witnesses: Vec<WitnessOut>,
}

impl BracketCheckOut {
    pub fn from_core(r: &HomLeibnizReport) -> Self {
        BracketCheckOut {
            multiplicative: r.multiplicative,
            identity: r.identity_holds,
            violations: r.violation_count,
            witnesses: r.witnesses.iter().map(WitnessOut::from_core).collect(),
        }
    }

    pub fn ok(&self) -> bool {
        self.multiplicative && self.identity
    }
}

#[derive(Serialize)]
pub struct CompatibilityOut {
    pub holds: bool,
    pub violations: usize,
    pub witnesses: Vec<WitnessOut>,
}

impl CompatibilityOut {
    pub fn from_core(r: &CompatibilityReport) -> Self {
        CompatibilityOut {
            holds: r.mixed_identity_holds,
            violations: r.mixed_violation_count,
            witnesses: r.mixed_witnesses.iter().map(WitnessOut::from_core).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ModuleCheckOut {
    pub left_equivariant: bool,
    pub right_equivariant: bool,
    pub left_action: bool,
    pub mixed_action: bool,
    pub right_action: bool,
    pub violations: usize,
    pub witnesses: Vec<WitnessOut>,
}

impl ModuleCheckOut {
    pub fn from_core(r: &BimoduleReport) -> Self {
        ModuleCheckOut {
            left_equivariant: r.left_equivariant,
            right_equivariant: r.right_equivariant,
            left_action: r.left_action_holds,
            mixed_action: r.mixed_action_holds,
            right_action: r.right_action_holds,
            violations: r.violation_count,
            witnesses: r.witnesses.iter().map(|(_, w)| WitnessOut::from_core(w)).collect(),
        }
    }

    pub fn ok(&self) -> bool {
        self.left_equivariant
            && self.right_equivariant
            && self.left_action
            && self.mixed_action
            && self.right_action
    }
}

#[derive(Serialize)]
pub struct CompatibleModuleCheckOut {
    pub first: ModuleCheckOut,
    pub second: ModuleCheckOut,
    pub llm: bool,
    pub lml: bool,
    pub mll: bool,
    pub violations: usize,
    pub witnesses: Vec<WitnessOut>,
}

impl CompatibleModuleCheckOut {
    pub fn from_core(r: &CompatibleBimoduleReport) -> Self {
        CompatibleModuleCheckOut {
            first: ModuleCheckOut::from_core(&r.first),
            second: ModuleCheckOut::from_core(&r.second),
            llm: r.llm_holds,
            lml: r.lml_holds,
            mll: r.mll_holds,
            violations: r.violation_count,
            witnesses: r.witnesses.iter().map(|(_, w)| WitnessOut::from_core(w)).collect(),
        }
    }

    pub fn ok(&self) -> bool {
        self.first.ok() && self.second.ok() && self.llm && self.lml && self.mll
    }
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub name: String,
    pub dim: usize,
    pub kind: &'static str,
    pub bracket1: BracketCheckOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket2: Option<BracketCheckOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub compatibility: Option<CompatibilityOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleCheckOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub compatible_module: Option<CompatibleModuleCheckOut>,
    /// Present and false when the module block was skipped because the
    /// algebra itself failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_checked: Option<bool>,
    pub pass: bool,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl VerifyOut {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "algebra: {} (dim {}, {})", self.name, self.dim, self.kind).unwrap();
        writeln!(
            out,
            "bracket 1: multiplicative: {}, identity: {}",
            yes_no(self.bracket1.multiplicative),
            yes_no(self.bracket1.identity)
        )
        .unwrap();
        witnesses_text(&mut out, "bracket 1", &self.bracket1.witnesses);
        if let Some(b2) = &self.bracket2 {
            writeln!(
                out,
                "bracket 2: multiplicative: {}, identity: {}",
                yes_no(b2.multiplicative),
                yes_no(b2.identity)
            )
            .unwrap();
            witnesses_text(&mut out, "bracket 2", &b2.witnesses);
        }
        if let Some(c) = &self.compatibility {
            writeln!(out, "compatible: {}", yes_no(c.holds)).unwrap();
            witnesses_text(&mut out, "compatibility", &c.witnesses);
        }
        if let Some(m) = &self.module {
            writeln!(out, "module: bimodule axioms: {}", yes_no(m.ok())).unwrap();
            witnesses_text(&mut out, "module", &m.witnesses);
        }
        if let Some(m) = &self.compatible_module {
            writeln!(out, "module: compatible bimodule axioms: {}", yes_no(m.ok())).unwrap();
            witnesses_text(&mut out, "module", &m.witnesses);
        }
        if self.module_checked == Some(false) {
            writeln!(out, "module: skipped (algebra checks failed)").unwrap();
        }
        writeln!(out, "verdict: {}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct DegreeOut {
    pub degree: usize,
    pub dim_cochains: usize,
    pub rank_d: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
}

#[derive(Serialize)]
pub struct CohomologyOut {
    pub name: String,
    pub coefficients: &'static str,
    pub max_degree: usize,
    pub degrees: Vec<DegreeOut>,
}

impl CohomologyOut {
    pub fn from_core(name: &str, coefficients: &'static str, report: &ComplexReport) -> Self {
        CohomologyOut {
            name: name.to_string(),
            coefficients,
            max_degree: report.degrees.len(),
            degrees: report
                .degrees
                .iter()
                .map(|d| DegreeOut {
                    degree: d.degree,
                    dim_cochains: d.dim_cochains,
                    rank_d: d.rank_d,
                    dim_cocycles: d.dim_cocycles,
                    dim_coboundaries: d.dim_coboundaries,
                    dim_h: d.dim_h,
                })
                .collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "algebra: {} ({} coefficients)", self.name, self.coefficients).unwrap();
        writeln!(out, "{:>6} {:>8} {:>6} {:>6} {:>6} {:>6}", "n", "dim C^n", "rank", "Z^n", "B^n", "H^n")
            .unwrap();
        for d in &self.degrees {
            writeln!(
                out,
                "{:>6} {:>8} {:>6} {:>6} {:>6} {:>6}",
                d.degree, d.dim_cochains, d.rank_d, d.dim_cocycles, d.dim_coboundaries, d.dim_h
            )
            .unwrap();
        }
        out
    }
}

#[derive(Serialize)]
pub struct NijenhuisOut {
    pub name: String,
    pub commutes_with_twist: bool,
    pub torsion1_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion2_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion1_witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion2_witness: Option<WitnessOut>,
    pub nijenhuis: bool,
}

impl NijenhuisOut {
    pub fn from_compatible(name: &str, r: &NijenhuisReport) -> Self {
        NijenhuisOut {
            name: name.to_string(),
            commutes_with_twist: r.commutes_with_twist,
            torsion1_zero: r.torsion1_zero,
            torsion2_zero: Some(r.torsion2_zero),
            torsion1_witness: r.torsion1_witness.as_ref().map(WitnessOut::from_core),
            torsion2_witness: r.torsion2_witness.as_ref().map(WitnessOut::from_core),
            nijenhuis: r.ok(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "algebra: {}", self.name).unwrap();
        writeln!(out, "operator commutes with twist: {}", yes_no(self.commutes_with_twist)).unwrap();
        writeln!(out, "torsion (bracket 1) zero: {}", yes_no(self.torsion1_zero)).unwrap();
        if let Some(w) = &self.torsion1_witness {
            witnesses_text(&mut out, "torsion 1", std::slice::from_ref(w));
        }
        if let Some(t2) = self.torsion2_zero {
            writeln!(out, "torsion (bracket 2) zero: {}", yes_no(t2)).unwrap();
            if let Some(w) = &self.torsion2_witness {
                witnesses_text(&mut out, "torsion 2", std::slice::from_ref(w));
            }
        }
        writeln!(out, "verdict: {}", if self.nijenhuis { "NIJENHUIS" } else { "NOT NIJENHUIS" })
            .unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct GeneratesOut {
    pub mu1_equivariant: bool,
    pub m1_equivariant: bool,
    pub cocycle: bool,
    pub pair_is_algebra: bool,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct TrivialOut {
    pub mu1_is_deformed_bracket: bool,
    pub m1_is_deformed_bracket: bool,
    pub n_intertwines_mu1: bool,
    pub n_intertwines_m1: bool,
    pub commutes_with_twist: bool,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct DeformOut {
    pub name: String,
    pub generates: GeneratesOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trivial_via: Option<TrivialOut>,
    pub pass: bool,
}

impl DeformOut {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "algebra: {}", self.name).unwrap();
        writeln!(
            out,
            "perturbations equivariant: mu1: {}, m1: {}",
            yes_no(self.generates.mu1_equivariant),
            yes_no(self.generates.m1_equivariant)
        )
        .unwrap();
        writeln!(out, "cocycle: {}", yes_no(self.generates.cocycle)).unwrap();
        writeln!(out, "pair is a compatible algebra: {}", yes_no(self.generates.pair_is_algebra))
            .unwrap();
        writeln!(out, "generates an infinitesimal deformation: {}", yes_no(self.generates.ok))
            .unwrap();
        if let Some(t) = &self.trivial_via {
            writeln!(out, "trivial via the supplied operator: {}", yes_no(t.ok)).unwrap();
            writeln!(
                out,
                "  mu1 matches: {}, m1 matches: {}, N-intertwining: {}/{}, twist commutes: {}",
                yes_no(t.mu1_is_deformed_bracket),
                yes_no(t.m1_is_deformed_bracket),
                yes_no(t.n_intertwines_mu1),
                yes_no(t.n_intertwines_m1),
                yes_no(t.commutes_with_twist)
            )
            .unwrap();
        }
        writeln!(out, "verdict: {}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

/// Serializes any report as stable pretty JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}
