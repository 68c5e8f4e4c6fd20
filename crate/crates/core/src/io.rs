//! JSON file formats and canonical serialization.
//!
//! All rationals travel as strings `"p/q"` (or `"p"` when the denominator
//! is 1) and are parsed exactly; every emitted rational is reduced with a
//! positive denominator, so serialization is canonical and reports are
//! byte-deterministic. Indices in files are 1-based.

use crate::algebra::HomLeibnizAlgebra;
use crate::base::{c1_base, truncated_polynomial_base, LocalAlgebraBase};
use crate::cohomology::{
    cochain_to_matrix, describe_flat_degree2, CohomologyReport,
};
use crate::deformation::Deformation;
use crate::error::Error;
use crate::exactla::{Matrix, Rational};
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::path::Path;
use std::str::FromStr;

/// Parses an exact rational from `"p"` or `"p/q"` syntax.
pub fn parse_rational(context: &str, s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num_str, den_str) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (t, None),
    };
    let numer = BigInt::from_str(num_str)
        .map_err(|e| Error::parse(context, format!("invalid numerator in \"{t}\": {e}")))?;
    let denom = match den_str {
        Some(q) => BigInt::from_str(q)
            .map_err(|e| Error::parse(context, format!("invalid denominator in \"{t}\": {e}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::parse(
            context,
            format!("zero denominator in \"{t}\""),
        ));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical rational string: reduced, positive denominator, `"p"` when the
/// denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_vector(context: &str, v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(context, s)).collect()
}

fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// One nonzero structure-constant entry: `value` is the coefficient vector
/// of `[e_i, e_j]` (1-based `i`, `j`).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

/// Algebra description file: dimension, nonzero bracket entries (omitted
/// pairs are zero), and the matrix of the twisting map (`alpha[r][c]` is the
/// `e_{r+1}`-coefficient of `alpha(e_{c+1})`).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
    pub alpha: Vec<Vec<String>>,
}

impl AlgebraFile {
    /// Converts to an algebra, checking shapes only (no axiom validation);
    /// used by verification commands that report axiom failures themselves.
    pub fn to_algebra_unchecked(&self) -> Result<HomLeibnizAlgebra> {
        let n = self.dim;
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        for e in &self.bracket {
            if e.i == 0 || e.i > n || e.j == 0 || e.j > n {
                return Err(Error::parse(
                    "algebra.bracket",
                    format!("indices ({}, {}) out of range 1..={n}", e.i, e.j),
                ));
            }
            if e.value.len() != n {
                return Err(Error::parse(
                    "algebra.bracket",
                    format!(
                        "value for ({}, {}) must have {n} entries, got {}",
                        e.i,
                        e.j,
                        e.value.len()
                    ),
                ));
            }
            c[e.i - 1][e.j - 1] = parse_vector("algebra.bracket.value", &e.value)?;
        }
        if self.alpha.len() != n || self.alpha.iter().any(|row| row.len() != n) {
            return Err(Error::parse(
                "algebra.alpha",
                format!("alpha must be a {n}x{n} array"),
            ));
        }
        let rows = self
            .alpha
            .iter()
            .map(|row| parse_vector("algebra.alpha", row))
            .collect::<Result<Vec<_>>>()?;
        let alpha = Matrix::from_rows(rows)?;
        HomLeibnizAlgebra::new_unchecked(n, c, alpha)
    }

    /// Converts to an algebra and validates the Hom-Leibniz axioms.
    pub fn to_algebra(&self) -> Result<HomLeibnizAlgebra> {
        let alg = self.to_algebra_unchecked()?;
        HomLeibnizAlgebra::new(
            alg.dim(),
            alg.structure_constants().clone(),
            alg.alpha().clone(),
        )
    }

    /// Canonical file form: nonzero bracket entries sorted by `(i, j)`.
    pub fn from_algebra(alg: &HomLeibnizAlgebra) -> Self {
        let n = alg.dim();
        let mut bracket = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = alg.bracket_basis(i, j);
                if !v.iter().all(Zero::is_zero) {
                    bracket.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        value: format_vector(v),
                    });
                }
            }
        }
        let alpha = (0..n)
            .map(|r| (0..n).map(|c| format_rational(alg.alpha().get(r, c))).collect())
            .collect();
        AlgebraFile {
            dim: n,
            bracket,
            alpha,
        }
    }
}

/// One nonzero base-multiplication entry: `value` is the coefficient vector
/// of `m_i · m_j` over the `m`-basis (1-based `i`, `j`).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MultEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

/// Base description file.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BaseFile {
    pub m_dim: usize,
    #[serde(default)]
    pub mult: Vec<MultEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl BaseFile {
    fn parse_table(&self) -> Result<Vec<Vec<Vec<Rational>>>> {
        let r = self.m_dim;
        let mut table = vec![vec![vec![Rational::zero(); r]; r]; r];
        for e in &self.mult {
            if e.i == 0 || e.i > r || e.j == 0 || e.j > r {
                return Err(Error::parse(
                    "base.mult",
                    format!("indices ({}, {}) out of range 1..={r}", e.i, e.j),
                ));
            }
            if e.value.len() != r {
                return Err(Error::parse(
                    "base.mult",
                    format!(
                        "value for ({}, {}) must have {r} entries, got {}",
                        e.i,
                        e.j,
                        e.value.len()
                    ),
                ));
            }
            table[e.i - 1][e.j - 1] = parse_vector("base.mult.value", &e.value)?;
        }
        Ok(table)
    }

    pub fn to_base(&self) -> Result<LocalAlgebraBase> {
        LocalAlgebraBase::new(self.m_dim, self.parse_table()?, self.labels.clone())
    }

    /// Converts checking shapes only (no axiom validation); used by
    /// verification commands that report axiom failures themselves.
    pub fn to_base_unchecked(&self) -> Result<LocalAlgebraBase> {
        LocalAlgebraBase::new_unchecked(self.m_dim, self.parse_table()?, self.labels.clone())
    }

    pub fn from_base(base: &LocalAlgebraBase) -> Self {
        let r = base.m_dim();
        let mut mult = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let v = base.product_of_basis(i, j);
                if !v.iter().all(Zero::is_zero) {
                    mult.push(MultEntry {
                        i: i + 1,
                        j: j + 1,
                        value: format_vector(v),
                    });
                }
            }
        }
        BaseFile {
            m_dim: r,
            mult,
            labels: Some(base.labels().to_vec()),
        }
    }
}

/// An algebra reference inside a composite file: inline or a relative path.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Path(String),
    Inline(AlgebraFile),
}

/// A base reference inside a composite file: a canonical name (`"c1:<h>"`,
/// `"trunc:<k>"`), a relative path, or an inline table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum BaseSpec {
    Named(String),
    Inline(BaseFile),
}

/// Deformation description file: algebra, base, and the flattened `ψ`-family
/// (one degree-2 coefficient vector per `m`-basis element, in the frozen
/// lexicographic flattening).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DeformationFile {
    pub algebra: AlgebraSpec,
    pub base: BaseSpec,
    pub psi: Vec<Vec<String>>,
}

/// Resolves a canonical base name: `"c1:<h>"` or `"trunc:<k>"`. Returns
/// `Ok(None)` when the string is not in canonical-name form (so it may be
/// treated as a path).
pub fn canonical_base(name: &str) -> Result<Option<LocalAlgebraBase>> {
    let Some((kind, arg)) = name.split_once(':') else {
        return Ok(None);
    };
    match kind {
        "c1" => {
            let h: usize = arg.parse().map_err(|_| {
                Error::parse("base", format!("invalid c1 base dimension \"{arg}\""))
            })?;
            Ok(Some(c1_base(h)))
        }
        "trunc" => {
            let k: usize = arg.parse().map_err(|_| {
                Error::parse("base", format!("invalid truncation order \"{arg}\""))
            })?;
            if k == 0 {
                return Err(Error::parse("base", "truncation order must be at least 1"));
            }
            Ok(Some(truncated_polynomial_base(k)))
        }
        other => Err(Error::parse(
            "base",
            format!("unknown canonical base kind \"{other}\" (expected c1:<h> or trunc:<k>)"),
        )),
    }
}

/// Reads and deserializes a JSON file, carrying line/column positions of
/// syntax errors in the error message.
pub fn read_json_file<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

/// Canonical JSON serialization: pretty-printed with a trailing newline.
/// Combined with canonical rational strings this is byte-deterministic.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::parse("serialize", e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn load_algebra(path: &Path) -> Result<HomLeibnizAlgebra> {
    let file: AlgebraFile = read_json_file(path)?;
    file.to_algebra()
}

pub fn load_base(path: &Path) -> Result<LocalAlgebraBase> {
    let file: BaseFile = read_json_file(path)?;
    file.to_base()
}

fn resolve_relative(dir: Option<&Path>, target: &str) -> std::path::PathBuf {
    let p = Path::new(target);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        match dir {
            Some(d) => d.join(p),
            None => p.to_path_buf(),
        }
    }
}

/// Resolves an algebra reference; relative paths are taken from `dir`.
pub fn resolve_algebra(spec: &AlgebraSpec, dir: Option<&Path>) -> Result<HomLeibnizAlgebra> {
    match spec {
        AlgebraSpec::Inline(f) => f.to_algebra(),
        AlgebraSpec::Path(p) => load_algebra(&resolve_relative(dir, p)),
    }
}

/// Resolves a base reference; names are tried as canonical bases first and
/// as paths second.
pub fn resolve_base(spec: &BaseSpec, dir: Option<&Path>) -> Result<LocalAlgebraBase> {
    match spec {
        BaseSpec::Inline(f) => f.to_base(),
        BaseSpec::Named(name) => {
            if let Some(base) = canonical_base(name)? {
                return Ok(base);
            }
            load_base(&resolve_relative(dir, name))
        }
    }
}

/// Loads a deformation file, resolving nested references relative to the
/// file's directory. Accepts either a bare deformation object or any report
/// that embeds one under a top-level `"deformation"` key, so command
/// outputs can feed the next command directly.
pub fn load_deformation(path: &Path) -> Result<Deformation> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    let source = match value.get("deformation") {
        Some(inner) => inner.clone(),
        None => value,
    };
    let file: DeformationFile = serde_json::from_value(source)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    deformation_from_file(&file, path.parent())
}

/// Builds a deformation from a parsed file, resolving references against
/// `dir`.
pub fn deformation_from_file(file: &DeformationFile, dir: Option<&Path>) -> Result<Deformation> {
    let alg = resolve_algebra(&file.algebra, dir)?;
    let base = resolve_base(&file.base, dir)?;
    let dim = alg.dim();
    let expected = dim * dim * dim;
    let mut psi = Vec::with_capacity(file.psi.len());
    for (idx, flat) in file.psi.iter().enumerate() {
        if flat.len() != expected {
            return Err(Error::parse(
                "deformation.psi",
                format!(
                    "ψ_{} must have {expected} coefficients for dimension {dim}, got {}",
                    idx + 1,
                    flat.len()
                ),
            ));
        }
        let coeffs = parse_vector("deformation.psi", flat)?;
        psi.push(crate::cohomology::Cochain::from_flat(2, dim, dim, coeffs)?);
    }
    Deformation::new(alg, base, psi)
}

/// Canonical file form of a deformation (inline algebra and base).
pub fn deformation_to_file(d: &Deformation) -> DeformationFile {
    DeformationFile {
        algebra: AlgebraSpec::Inline(AlgebraFile::from_algebra(d.algebra())),
        base: BaseSpec::Inline(BaseFile::from_base(d.base())),
        psi: d.psi().iter().map(|c| format_vector(c.coeffs())).collect(),
    }
}

/// Subspace dimensions of one cohomology degree.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CohomologyDims {
    pub z: usize,
    pub b: usize,
    pub h: usize,
}

/// Serialized cohomology report. Flat vectors use the frozen lexicographic
/// flattening; for 3-dimensional algebras in degree 2 the `*_names` fields
/// render each vector as a combination of the `E_{rs}` elementary cochains
/// and `h_matrix_displays` carries the 3×9 matrix displays.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CohomologyReportFile {
    pub degree: usize,
    pub mode: String,
    pub dims: CohomologyDims,
    pub z_basis: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_basis_names: Option<Vec<String>>,
    pub b_basis: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_basis_names: Option<Vec<String>>,
    pub h_representatives: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_representative_names: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_matrix_displays: Option<Vec<Vec<Vec<String>>>>,
}

/// Builds the serialized form of a cohomology report.
pub fn cohomology_report_file(report: &CohomologyReport) -> Result<CohomologyReportFile> {
    let displayable = report.degree == 2
        && report
            .h_reps
            .first()
            .map(|c| c.alg_dim() == 3 && c.module_dim() == 3)
            .unwrap_or_else(|| report.z.ambient_dim() == 27);
    let z_basis: Vec<Vec<String>> = report.z.basis().iter().map(|v| format_vector(v)).collect();
    let b_basis: Vec<Vec<String>> = report.b.basis().iter().map(|v| format_vector(v)).collect();
    let h_representatives: Vec<Vec<String>> = report
        .h_reps
        .iter()
        .map(|c| format_vector(c.coeffs()))
        .collect();
    let (z_names, b_names, h_names, displays) = if displayable {
        let z_names = report
            .z
            .basis()
            .iter()
            .map(|v| describe_flat_degree2(v))
            .collect();
        let b_names = report
            .b
            .basis()
            .iter()
            .map(|v| describe_flat_degree2(v))
            .collect();
        let h_names = report
            .h_reps
            .iter()
            .map(|c| describe_flat_degree2(c.coeffs()))
            .collect();
        let mut displays = Vec::with_capacity(report.h_reps.len());
        for c in &report.h_reps {
            let m = cochain_to_matrix(c)?;
            let rows: Vec<Vec<String>> = (0..3)
                .map(|r| (0..9).map(|s| format_rational(m.get(r, s))).collect())
                .collect();
            displays.push(rows);
        }
        (Some(z_names), Some(b_names), Some(h_names), Some(displays))
    } else {
        (None, None, None, None)
    };
    Ok(CohomologyReportFile {
        degree: report.degree,
        mode: report.mode.to_string(),
        dims: CohomologyDims {
            z: report.z_dim(),
            b: report.b_dim(),
            h: report.h_dim(),
        },
        z_basis,
        z_basis_names: z_names,
        b_basis,
        b_basis_names: b_names,
        h_representatives,
        h_representative_names: h_names,
        h_matrix_displays: displays,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_fixtures::{base_bracket, unipotent_alpha};
    use crate::{rat, rint};

    #[test]
    fn rational_round_trips() {
        for s in ["0", "5", "-17", "1/2", "-3/4", "22/7"] {
            let r = parse_rational("test", s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // Canonicalization: reduction and denominator sign.
        assert_eq!(format_rational(&parse_rational("t", "-3/6").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("t", "4/-8").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("t", "6/3").unwrap()), "2");
        assert_eq!(parse_rational("t", " 7 ").unwrap(), rint(7));
    }

    #[test]
    fn bad_rationals_rejected() {
        for s in ["", "x", "1/0", "1/2/3", "3.5", "1 / 0"] {
            assert!(parse_rational("test", s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn algebra_file_round_trips() {
        let alg =
            HomLeibnizAlgebra::new(3, base_bracket(), unipotent_alpha(1, 2)).unwrap();
        let file = AlgebraFile::from_algebra(&alg);
        let back = file.to_algebra().unwrap();
        assert_eq!(back, alg);
        let json = to_canonical_json(&file).unwrap();
        let reparsed: AlgebraFile = serde_json::from_str(&json).unwrap();
        assert_eq!(reparsed, file);
    }

    #[test]
    fn algebra_file_validates_indices() {
        let file = AlgebraFile {
            dim: 2,
            bracket: vec![BracketEntry {
                i: 3,
                j: 1,
                value: vec!["1".into(), "0".into()],
            }],
            alpha: vec![
                vec!["1".into(), "0".into()],
                vec!["0".into(), "1".into()],
            ],
        };
        assert!(file.to_algebra_unchecked().is_err());
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{ "dim": 1, "alpha": [["1"]], "extra": true }"#;
        let res: std::result::Result<AlgebraFile, _> = serde_json::from_str(text);
        assert!(res.is_err());
    }

    #[test]
    fn base_file_round_trips() {
        let base = truncated_polynomial_base(3);
        let file = BaseFile::from_base(&base);
        assert_eq!(file.to_base().unwrap(), base);
    }

    #[test]
    fn canonical_base_names() {
        assert_eq!(
            canonical_base("trunc:2").unwrap().unwrap(),
            truncated_polynomial_base(2)
        );
        assert_eq!(canonical_base("c1:3").unwrap().unwrap(), c1_base(3));
        assert!(canonical_base("plain-path.json").unwrap().is_none());
        assert!(canonical_base("c1:x").is_err());
        assert!(canonical_base("trunc:0").is_err());
        assert!(canonical_base("weird:1").is_err());
    }

    #[test]
    fn deformation_file_round_trips_inline() {
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), Matrix::identity(3)).unwrap();
        let rep = crate::algebra::adjoint_representation(&alg).unwrap();
        let report = crate::cohomology::cohomology_report(
            &alg,
            &rep,
            2,
            crate::cohomology::CoboundaryMode::Strict,
        )
        .unwrap();
        let eta1 = crate::deformation::universal_infinitesimal(&alg, &report).unwrap();
        let file = deformation_to_file(&eta1);
        let back = deformation_from_file(&file, None).unwrap();
        assert_eq!(back, eta1);
    }

    #[test]
    fn load_deformation_accepts_report_wrappers() {
        let dir = tempfile::tempdir().unwrap();
        let file = DeformationFile {
            algebra: AlgebraSpec::Inline(AlgebraFile::from_algebra(
                &HomLeibnizAlgebra::new(3, base_bracket(), Matrix::identity(3)).unwrap(),
            )),
            base: BaseSpec::Named("trunc:1".into()),
            psi: vec![vec!["0".into(); 27]],
        };
        let bare_path = dir.path().join("bare.json");
        std::fs::write(&bare_path, to_canonical_json(&file).unwrap()).unwrap();
        let bare = load_deformation(&bare_path).unwrap();

        let wrapped = serde_json::json!({
            "mode": "strict",
            "deformation": serde_json::to_value(&file).unwrap(),
        });
        let wrapped_path = dir.path().join("wrapped.json");
        std::fs::write(&wrapped_path, to_canonical_json(&wrapped).unwrap()).unwrap();
        assert_eq!(load_deformation(&wrapped_path).unwrap(), bare);
    }

    #[test]
    fn deformation_file_resolves_paths_and_names() {
        let dir = tempfile::tempdir().unwrap();
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), Matrix::identity(3)).unwrap();
        let alg_path = dir.path().join("alg.json");
        std::fs::write(
            &alg_path,
            to_canonical_json(&AlgebraFile::from_algebra(&alg)).unwrap(),
        )
        .unwrap();
        let file = DeformationFile {
            algebra: AlgebraSpec::Path("alg.json".into()),
            base: BaseSpec::Named("c1:1".into()),
            psi: vec![vec!["0".into(); 27]],
        };
        let def_path = dir.path().join("def.json");
        std::fs::write(&def_path, to_canonical_json(&file).unwrap()).unwrap();
        let d = load_deformation(&def_path).unwrap();
        assert_eq!(d.algebra(), &alg);
        assert_eq!(d.base(), &c1_base(1));
        assert!(d.is_trivial());
    }

    #[test]
    fn report_serialization_is_deterministic() {
        let alg = HomLeibnizAlgebra::new(3, base_bracket(), Matrix::identity(3)).unwrap();
        let rep = crate::algebra::adjoint_representation(&alg).unwrap();
        let report = crate::cohomology::cohomology_report(
            &alg,
            &rep,
            2,
            crate::cohomology::CoboundaryMode::Strict,
        )
        .unwrap();
        let f1 = cohomology_report_file(&report).unwrap();
        let f2 = cohomology_report_file(&report).unwrap();
        assert_eq!(
            to_canonical_json(&f1).unwrap(),
            to_canonical_json(&f2).unwrap()
        );
        assert!(f1.h_representative_names.is_some());
    }

    #[test]
    fn zero_denominator_in_file_is_a_parse_error() {
        let file = AlgebraFile {
            dim: 1,
            bracket: vec![BracketEntry {
                i: 1,
                j: 1,
                value: vec!["1/0".into()],
            }],
            alpha: vec![vec!["1".into()]],
        };
        match file.to_algebra_unchecked() {
            Err(Error::Parse { detail, .. }) => assert!(detail.contains("zero denominator")),
            other => panic!("expected parse error, got {other:?}"),
        }
        let _ = rat(1, 2);
    }
}
