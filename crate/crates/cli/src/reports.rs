//! Report types emitted by the CLI and their JSON/text renderings.
//!
//! JSON is the canonical machine format: fixed field order, canonical
//! rational strings, pretty-printed with a trailing newline — byte-identical
//! across runs. The text format is a human-readable view of the same data;
//! `HOMDEF_COLOR` adds ANSI styling to text output only and never changes
//! the content.

use homdef_core::io::{
    format_rational, to_canonical_json, BaseFile, CohomologyReportFile, DeformationFile,
};
use homdef_core::{Matrix, Rational, Result};
use serde::Serialize;

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// ANSI styling for text reports; a no-op unless enabled.
pub struct Style {
    enabled: bool,
}

impl Style {
    pub fn from_env(format: Format) -> Self {
        let enabled = format == Format::Text
            && std::env::var("HOMDEF_COLOR")
                .map(|v| {
                    matches!(
                        v.to_ascii_lowercase().as_str(),
                        "1" | "true" | "yes" | "always" | "on"
                    )
                })
                .unwrap_or(false);
        Style { enabled }
    }

    fn wrap(&self, code: &str, s: &str) -> String {
        if self.enabled {
            format!("\u{1b}[{code}m{s}\u{1b}[0m")
        } else {
            s.to_string()
        }
    }

    pub fn heading(&self, s: &str) -> String {
        self.wrap("1;36", s)
    }

    pub fn ok(&self, s: &str) -> String {
        self.wrap("32", s)
    }

    pub fn bad(&self, s: &str) -> String {
        self.wrap("1;31", s)
    }

    pub fn status(&self, s: &str) -> String {
        if s == "ok" || s == "extended" {
            self.ok(s)
        } else {
            self.bad(s)
        }
    }
}

pub fn ok_str(good: bool) -> String {
    if good { "ok" } else { "failed" }.to_string()
}

pub fn format_flat(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn format_matrix_rows(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect())
        .collect()
}

fn join(v: &[String]) -> String {
    v.join(", ")
}

/// One axiom violation: 1-based basis triple and the defect vector.
#[derive(Debug, Serialize)]
pub struct Violation {
    pub triple: [usize; 3],
    pub defect: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BaseVerify {
    pub commutative: String,
    pub associative: String,
    pub nilpotent: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub hom_jacobi: String,
    pub multiplicative: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hom_jacobi_violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseVerify>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.hom_jacobi == "ok"
            && self.multiplicative == "ok"
            && self
                .base
                .as_ref()
                .map(|b| b.commutative == "ok" && b.associative == "ok" && b.nilpotent == "ok")
                .unwrap_or(true)
    }

    fn to_text(&self, st: &Style) -> String {
        let mut out = String::new();
        out.push_str(&format!("hom_jacobi: {}\n", st.status(&self.hom_jacobi)));
        if let Some(v) = self.hom_jacobi_violations.first() {
            out.push_str(&format!(
                "  first violating triple: (e{}, e{}, e{}) with defect [{}]\n",
                v.triple[0],
                v.triple[1],
                v.triple[2],
                join(&v.defect)
            ));
            out.push_str(&format!(
                "  violating triples in total: {}\n",
                self.hom_jacobi_violations.len()
            ));
        }
        out.push_str(&format!(
            "multiplicative: {}\n",
            st.status(&self.multiplicative)
        ));
        if let Some(b) = &self.base {
            out.push_str(&format!("base commutative: {}\n", st.status(&b.commutative)));
            out.push_str(&format!("base associative: {}\n", st.status(&b.associative)));
            out.push_str(&format!("base nilpotent: {}\n", st.status(&b.nilpotent)));
        }
        out
    }
}

fn cohomology_text(r: &CohomologyReportFile, st: &Style) -> String {
    let n = r.degree;
    let mut out = String::new();
    out.push_str(&format!("degree: {n}\n"));
    out.push_str(&format!("mode: {}\n", r.mode));
    out.push_str(&format!("dim Z^{n}: {}\n", r.dims.z));
    out.push_str(&format!("dim B^{n}: {}\n", r.dims.b));
    out.push_str(&format!("dim H^{n}: {}\n", r.dims.h));
    let name_or_flat = |names: &Option<Vec<String>>, flats: &[Vec<String>], idx: usize| {
        match names {
            Some(ns) => ns[idx].clone(),
            None => format!("[{}]", join(&flats[idx])),
        }
    };
    out.push_str(&format!("{}\n", st.heading(&format!("Z^{n} basis:"))));
    for i in 0..r.z_basis.len() {
        out.push_str(&format!("  {}\n", name_or_flat(&r.z_basis_names, &r.z_basis, i)));
    }
    out.push_str(&format!("{}\n", st.heading(&format!("B^{n} basis:"))));
    for i in 0..r.b_basis.len() {
        out.push_str(&format!("  {}\n", name_or_flat(&r.b_basis_names, &r.b_basis, i)));
    }
    out.push_str(&format!("{}\n", st.heading(&format!("H^{n} representatives:"))));
    for i in 0..r.h_representatives.len() {
        out.push_str(&format!(
            "  [{}] {}\n",
            i + 1,
            name_or_flat(&r.h_representative_names, &r.h_representatives, i)
        ));
        if let Some(displays) = &r.h_matrix_displays {
            for row in &displays[i] {
                out.push_str(&format!("      {}\n", row.join(" ")));
            }
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct DefectEntry {
    pub triple: [usize; 3],
    pub base_label: String,
    pub defect: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct InfinitesimalReport {
    pub mode: String,
    pub h2_dim: usize,
    pub psi_equivariant: Vec<bool>,
    pub check: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub defects: Vec<DefectEntry>,
    pub deformation: DeformationFile,
}

impl InfinitesimalReport {
    fn to_text(&self, st: &Style) -> String {
        let mut out = String::new();
        out.push_str(&format!("mode: {}\n", self.mode));
        out.push_str(&format!("dim H^2: {}\n", self.h2_dim));
        out.push_str(&format!(
            "psi equivariant: [{}]\n",
            self.psi_equivariant
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        out.push_str(&format!("deformation check: {}\n", st.status(&self.check)));
        for d in &self.defects {
            out.push_str(&format!(
                "  defect at (e{}, e{}, e{}) along {}: [{}]\n",
                d.triple[0],
                d.triple[1],
                d.triple[2],
                d.base_label,
                join(&d.defect)
            ));
        }
        out.push_str(&format!("{}\n", st.heading("psi family:")));
        for (i, p) in self.deformation.psi.iter().enumerate() {
            out.push_str(&format!("  psi_{}: [{}]\n", i + 1, join(p)));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ObstructionEntry {
    pub class: Vec<String>,
    pub is_zero: bool,
    pub cocycle: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ExtendReport {
    pub mode: String,
    pub order: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub next_psi: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionEntry>,
}

impl ExtendReport {
    fn to_text(&self, st: &Style) -> String {
        let mut out = String::new();
        out.push_str(&format!("mode: {}\n", self.mode));
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("status: {}\n", st.status(&self.status)));
        if let Some(p) = &self.next_psi {
            out.push_str(&format!("psi_{}: [{}]\n", self.order + 1, join(p)));
        }
        if let Some(o) = &self.obstruction {
            out.push_str(&format!("obstruction class: [{}]\n", join(&o.class)));
            out.push_str(&format!("class is zero: {}\n", o.is_zero));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ObstructionReport {
    pub mode: String,
    pub order: usize,
    pub h3_dim: usize,
    pub obstruction: ObstructionEntry,
}

impl ObstructionReport {
    fn to_text(&self, st: &Style) -> String {
        let mut out = String::new();
        out.push_str(&format!("mode: {}\n", self.mode));
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("dim H^3: {}\n", self.h3_dim));
        out.push_str(&format!(
            "obstruction class: [{}]\n",
            join(&self.obstruction.class)
        ));
        let zero = if self.obstruction.is_zero {
            st.ok("true")
        } else {
            st.bad("false")
        };
        out.push_str(&format!("class is zero: {zero}\n"));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct VersalObstructionEntry {
    pub harrison: Vec<String>,
    pub class: Vec<String>,
    pub is_zero: bool,
}

#[derive(Debug, Serialize)]
pub struct VersalStepReport {
    pub mode: String,
    pub harrison_h2_basis: Vec<Vec<String>>,
    pub obstruction_table: Vec<VersalObstructionEntry>,
    pub kernel_basis: Vec<Vec<String>>,
    pub next_base: BaseFile,
    pub next_psi: Vec<Vec<String>>,
    pub projection: Vec<Vec<String>>,
    pub inclusion: Vec<Vec<String>>,
    pub deformation: DeformationFile,
}

impl VersalStepReport {
    fn to_text(&self, st: &Style) -> String {
        let mut out = String::new();
        out.push_str(&format!("mode: {}\n", self.mode));
        out.push_str(&format!(
            "dim Harrison H^2: {}\n",
            self.harrison_h2_basis.len()
        ));
        out.push_str(&format!("{}\n", st.heading("obstruction table:")));
        for (i, e) in self.obstruction_table.iter().enumerate() {
            out.push_str(&format!(
                "  [{}] harrison [{}] -> class [{}] (zero: {})\n",
                i + 1,
                join(&e.harrison),
                join(&e.class),
                e.is_zero
            ));
        }
        out.push_str(&format!(
            "dim ker(w_1): {}\n",
            self.kernel_basis.len()
        ));
        out.push_str(&format!("{}\n", st.heading("next base:")));
        let labels = self
            .next_base
            .labels
            .clone()
            .unwrap_or_default()
            .join(", ");
        out.push_str(&format!(
            "  m_dim: {} [{}]\n",
            self.next_base.m_dim, labels
        ));
        for e in &self.next_base.mult {
            out.push_str(&format!(
                "  m{} * m{} = [{}]\n",
                e.i,
                e.j,
                join(&e.value)
            ));
        }
        out.push_str(&format!("{}\n", st.heading("next psi family:")));
        for (i, p) in self.next_psi.iter().enumerate() {
            out.push_str(&format!("  psi_{}: [{}]\n", i + 1, join(p)));
        }
        out
    }
}

/// Everything the CLI can print.
pub enum Report {
    Verify(VerifyReport),
    Cohomology(CohomologyReportFile),
    Infinitesimal(InfinitesimalReport),
    Extend(ExtendReport),
    Obstruction(ObstructionReport),
    VersalStep(VersalStepReport),
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => match self {
                Report::Verify(r) => to_canonical_json(r),
                Report::Cohomology(r) => to_canonical_json(r),
                Report::Infinitesimal(r) => to_canonical_json(r),
                Report::Extend(r) => to_canonical_json(r),
                Report::Obstruction(r) => to_canonical_json(r),
                Report::VersalStep(r) => to_canonical_json(r),
            },
            Format::Text => {
                let st = Style::from_env(format);
                Ok(match self {
                    Report::Verify(r) => r.to_text(&st),
                    Report::Cohomology(r) => cohomology_text(r, &st),
                    Report::Infinitesimal(r) => r.to_text(&st),
                    Report::Extend(r) => r.to_text(&st),
                    Report::Obstruction(r) => r.to_text(&st),
                    Report::VersalStep(r) => r.to_text(&st),
                })
            }
        }
    }
}
