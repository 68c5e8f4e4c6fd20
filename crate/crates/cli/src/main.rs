//! `homdef`: exact cohomology and deformation computations for
//! finite-dimensional Hom-Leibniz algebras, driven by JSON files.
//!
//! Exit codes: 0 on success, 1 on any validation or parse failure, 2 when
//! `extend` hits a nonzero obstruction class.

mod manifest;
mod params;
mod reports;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homdef_core::algebra::{
    adjoint_representation, check_hom_jacobi, check_multiplicative, yau_twist, HomLeibnizAlgebra,
};
use homdef_core::base::{truncated_polynomial_base, LocalAlgebraBase};
use homdef_core::cohomology::{cohomology_report, CoboundaryMode, Cochain};
use homdef_core::deformation::{
    check_deformation, psi_equivariance, universal_infinitesimal, Deformation,
};
use homdef_core::io::{
    self, deformation_to_file, AlgebraFile, BaseFile,
};
use homdef_core::obstruction::{
    extend_one_parameter, obstruction_class_from_cocycle, quadratic_term, versal_step,
    OneParameterOutcome,
};
use homdef_core::{Error, Result};
use params::{parse_param_list, substitute_parameters, ParamMap};
use reports::{
    format_flat, format_matrix_rows, ok_str, BaseVerify, DefectEntry, ExtendReport, Format,
    InfinitesimalReport, ObstructionEntry, ObstructionReport, Report, VerifyReport,
    VersalObstructionEntry, VersalStepReport, Violation,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homdef",
    version,
    about = "Exact cohomology, deformations, and obstructions of finite-dimensional Hom-Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Coboundaries are differentials of equivariant cochains
    Strict,
    /// Coboundaries are ambient differentials intersected with the
    /// equivariant cocycle space
    PaperExample,
}

impl From<ModeArg> for CoboundaryMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => CoboundaryMode::Strict,
            ModeArg::PaperExample => CoboundaryMode::PaperExample,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report to this file instead of stdout
    #[arg(long = "out")]
    out: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Algebra file path, or builtin:parametric
    #[arg(long)]
    algebra: String,
    /// Parameter bindings for templates, e.g. a=1,b=0,c=1/2
    #[arg(long)]
    params: Option<String>,
    /// Replace the bracket by alpha∘bracket after substitution
    #[arg(long = "yau-twist")]
    yau_twist: bool,
}

#[derive(Args)]
struct ModeArgs {
    /// Coboundary convention
    #[arg(long, value_enum, default_value = "paper-example")]
    mode: ModeArg,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hom-Leibniz axioms of an algebra (and optionally a base)
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Base file path or canonical name (c1:<h>, trunc:<k>)
        #[arg(long)]
        base: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute Z, B, and H of the twisted cochain complex in one degree
    Cohomology {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Cohomology degree (the complex starts at 1)
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the universal infinitesimal deformation over the dual of H^2
    Infinitesimal {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Extend a one-parameter family by one order, or exit 2 when obstructed
    Extend {
        /// Deformation file over the base trunc:<k>
        #[arg(long)]
        deformation: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the next-order obstruction class of a one-parameter family
    Obstruction {
        /// Deformation file over the base trunc:<k>
        #[arg(long)]
        deformation: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run one versal extension step from an infinitesimal deformation
    VersalStep {
        /// Deformation file over an infinitesimal base (m^2 = 0)
        #[arg(long)]
        deformation: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Execute a job manifest: a JSON file or a builtin name
    /// (example1, example2, example3)
    Run {
        /// Manifest path or builtin name
        manifest: String,
    },
}

fn resolve_path(dir: Option<&Path>, target: &str) -> PathBuf {
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

fn load_algebra_file(spec: &str, dir: Option<&Path>) -> Result<AlgebraFile> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return match name {
            "parametric" => Ok(params::parametric_template()),
            other => Err(Error::parse(
                "algebra",
                format!("unknown builtin algebra \"{other}\" (available: parametric)"),
            )),
        };
    }
    io::read_json_file(&resolve_path(dir, spec))
}

/// Loads, substitutes, and (optionally) validates and twists an algebra.
fn prepare_algebra(
    spec: &str,
    dir: Option<&Path>,
    params: &ParamMap,
    yau: bool,
    validate: bool,
) -> Result<HomLeibnizAlgebra> {
    let file = load_algebra_file(spec, dir)?;
    let file = substitute_parameters(&file, params)?;
    let alg = if validate {
        file.to_algebra()?
    } else {
        file.to_algebra_unchecked()?
    };
    if yau {
        yau_twist(&alg)
    } else {
        Ok(alg)
    }
}

fn resolve_base_unchecked(spec: &str, dir: Option<&Path>) -> Result<LocalAlgebraBase> {
    if let Some(base) = io::canonical_base(spec)? {
        return Ok(base);
    }
    let file: BaseFile = io::read_json_file(&resolve_path(dir, spec))?;
    file.to_base_unchecked()
}

fn cmd_verify(
    algebra_spec: &str,
    dir: Option<&Path>,
    params: &ParamMap,
    yau: bool,
    base_spec: Option<&str>,
) -> Result<(Report, u8)> {
    let alg0 = prepare_algebra(algebra_spec, dir, params, false, false)?;
    let mut hj = check_hom_jacobi(&alg0);
    let mut mult = check_multiplicative(&alg0);
    if yau && hj.is_empty() && mult {
        let twisted = yau_twist(&alg0)?;
        hj = check_hom_jacobi(&twisted);
        mult = check_multiplicative(&twisted);
    }
    let base = match base_spec {
        None => None,
        Some(spec) => {
            let b = resolve_base_unchecked(spec, dir)?;
            Some(BaseVerify {
                commutative: ok_str(b.is_commutative()),
                associative: ok_str(b.is_associative()),
                nilpotent: ok_str(b.is_nilpotent()),
            })
        }
    };
    let report = VerifyReport {
        hom_jacobi: ok_str(hj.is_empty()),
        multiplicative: ok_str(mult),
        hom_jacobi_violations: hj
            .into_iter()
            .map(|(i, j, k, defect)| Violation {
                triple: [i + 1, j + 1, k + 1],
                defect: format_flat(&defect),
            })
            .collect(),
        base,
    };
    let exit = if report.passed() { 0 } else { 1 };
    Ok((Report::Verify(report), exit))
}

fn cmd_cohomology(
    algebra_spec: &str,
    dir: Option<&Path>,
    params: &ParamMap,
    yau: bool,
    degree: usize,
    mode: CoboundaryMode,
) -> Result<(Report, u8)> {
    let alg = prepare_algebra(algebra_spec, dir, params, yau, true)?;
    let rep = adjoint_representation(&alg)?;
    let report = cohomology_report(&alg, &rep, degree, mode)?;
    Ok((Report::Cohomology(io::cohomology_report_file(&report)?), 0))
}

fn cmd_infinitesimal(
    algebra_spec: &str,
    dir: Option<&Path>,
    params: &ParamMap,
    yau: bool,
    mode: CoboundaryMode,
) -> Result<(Report, u8)> {
    let alg = prepare_algebra(algebra_spec, dir, params, yau, true)?;
    let rep = adjoint_representation(&alg)?;
    let h2 = cohomology_report(&alg, &rep, 2, mode)?;
    let eta1 = universal_infinitesimal(&alg, &h2)?;
    let certs = check_deformation(&eta1)?;
    let flags = psi_equivariance(&eta1)?;
    let ok = certs.is_empty();
    let report = InfinitesimalReport {
        mode: mode.to_string(),
        h2_dim: h2.h_dim(),
        psi_equivariant: flags,
        check: ok_str(ok),
        defects: certs
            .into_iter()
            .map(|c| DefectEntry {
                triple: [c.triple.0 + 1, c.triple.1 + 1, c.triple.2 + 1],
                base_label: c.a_label,
                defect: format_flat(&c.defect),
            })
            .collect(),
        deformation: deformation_to_file(&eta1),
    };
    let exit = if ok { 0 } else { 1 };
    Ok((Report::Infinitesimal(report), exit))
}

/// Loads a deformation over `trunc:<k>` and returns it with its order.
fn load_truncated_family(path: &Path) -> Result<(Deformation, usize)> {
    let d = io::load_deformation(path)?;
    let k = d.base().m_dim();
    if k == 0 || d.base().mult_table() != truncated_polynomial_base(k).mult_table() {
        return Err(Error::UnsupportedBase(
            "this command handles one-parameter families over trunc:<k>".into(),
        ));
    }
    Ok((d, k))
}

fn cmd_extend(path: &Path, mode: CoboundaryMode) -> Result<(Report, u8)> {
    let (d, k) = load_truncated_family(path)?;
    let alg = d.algebra().clone();
    let rep = adjoint_representation(&alg)?;
    let h3 = cohomology_report(&alg, &rep, 3, mode)?;
    match extend_one_parameter(&alg, &h3, d.psi())? {
        OneParameterOutcome::Extended(next) => {
            let mut psi = d.psi().to_vec();
            psi.push(next.clone());
            let next_def =
                Deformation::new(alg, truncated_polynomial_base(k + 1), psi)?;
            let report = ExtendReport {
                mode: mode.to_string(),
                order: k,
                status: "extended".to_string(),
                next_psi: Some(format_flat(next.coeffs())),
                deformation: Some(deformation_to_file(&next_def)),
                obstruction: None,
            };
            Ok((Report::Extend(report), 0))
        }
        OneParameterOutcome::Obstructed(class) => {
            let report = ExtendReport {
                mode: mode.to_string(),
                order: k,
                status: "obstructed".to_string(),
                next_psi: None,
                deformation: None,
                obstruction: Some(ObstructionEntry {
                    class: format_flat(&class.class_vector),
                    is_zero: class.is_zero,
                    cocycle: format_flat(class.cocycle.coeffs()),
                }),
            };
            Ok((Report::Extend(report), 2))
        }
    }
}

fn cmd_obstruction(path: &Path, mode: CoboundaryMode) -> Result<(Report, u8)> {
    let (d, k) = load_truncated_family(path)?;
    let alg = d.algebra();
    let rep = adjoint_representation(alg)?;
    let h3 = cohomology_report(alg, &rep, 3, mode)?;
    // The t^{k+1}-coefficient of the deformation equation:
    // R = Σ_{i+j=k+1, 1 ≤ i,j ≤ k} Q(ψ_i, ψ_j).
    let mut r = Cochain::zero(3, alg.dim(), alg.dim());
    for i in 1..=k {
        let j = k + 1 - i;
        if (1..=k).contains(&j) {
            r = r.add(&quadratic_term(alg, &d.psi()[i - 1], &d.psi()[j - 1])?);
        }
    }
    let class = obstruction_class_from_cocycle(alg, &rep, &h3, r)?;
    let report = ObstructionReport {
        mode: mode.to_string(),
        order: k,
        h3_dim: h3.h_dim(),
        obstruction: ObstructionEntry {
            class: format_flat(&class.class_vector),
            is_zero: class.is_zero,
            cocycle: format_flat(class.cocycle.coeffs()),
        },
    };
    Ok((Report::Obstruction(report), 0))
}

fn cmd_versal_step(path: &Path, mode: CoboundaryMode) -> Result<(Report, u8)> {
    let d = io::load_deformation(path)?;
    let alg = d.algebra();
    let rep = adjoint_representation(alg)?;
    let h2 = cohomology_report(alg, &rep, 2, mode)?;
    let h3 = cohomology_report(alg, &rep, 3, mode)?;
    let result = versal_step(alg, &h2, &h3, &d)?;
    let report = VersalStepReport {
        mode: mode.to_string(),
        harrison_h2_basis: result
            .obstruction_table
            .iter()
            .map(|(f, _)| format_flat(&f.to_flat()))
            .collect(),
        obstruction_table: result
            .obstruction_table
            .iter()
            .map(|(f, c)| VersalObstructionEntry {
                harrison: format_flat(&f.to_flat()),
                class: format_flat(&c.class_vector),
                is_zero: c.is_zero,
            })
            .collect(),
        kernel_basis: result
            .kernel_classes
            .iter()
            .map(|f| format_flat(&f.to_flat()))
            .collect(),
        next_base: BaseFile::from_base(&result.next_base),
        next_psi: result
            .next_deformation
            .psi()
            .iter()
            .map(|c| format_flat(c.coeffs()))
            .collect(),
        projection: format_matrix_rows(result.projection.matrix()),
        inclusion: format_matrix_rows(&result.inclusion),
        deformation: deformation_to_file(&result.next_deformation),
    };
    Ok((Report::VersalStep(report), 0))
}

struct Output {
    text: String,
    path: Option<PathBuf>,
    exit: u8,
}

fn render(report: Report, exit: u8, format: Format, out: Option<PathBuf>) -> Result<Output> {
    Ok(Output {
        text: report.render(format)?,
        path: out,
        exit,
    })
}

fn parse_optional_params(s: Option<&str>) -> Result<ParamMap> {
    match s {
        Some(s) => parse_param_list(s),
        None => Ok(ParamMap::new()),
    }
}

fn run_manifest(name_or_path: &str) -> Result<Output> {
    let (m, dir) = manifest::load_manifest(name_or_path)?;
    let dir = dir.as_deref();
    let params = match &m.parameters {
        Some(map) => {
            let mut out = ParamMap::new();
            for (k, v) in map {
                out.insert(k.clone(), io::parse_rational("manifest.parameters", v)?);
            }
            out
        }
        None => ParamMap::new(),
    };
    let mode: CoboundaryMode = match &m.mode {
        Some(s) => s.parse()?,
        None => CoboundaryMode::PaperExample,
    };
    let format = match m.format.as_deref() {
        None | Some("json") => Format::Json,
        Some("text") => Format::Text,
        Some(other) => {
            return Err(Error::parse(
                "manifest.format",
                format!("expected json or text, got \"{other}\""),
            ))
        }
    };
    let yau = m.yau_twist.unwrap_or(false);
    let out = m.output_path.as_ref().map(PathBuf::from);
    let need = |field: Option<&String>, name: &str| -> Result<String> {
        field.cloned().ok_or_else(|| {
            Error::parse(
                "manifest",
                format!("command \"{}\" requires the field \"{name}\"", m.command),
            )
        })
    };
    let (report, exit) = match m.command.as_str() {
        "verify" => cmd_verify(
            &need(m.algebra_path.as_ref(), "algebra_path")?,
            dir,
            &params,
            yau,
            m.base_path.as_deref(),
        )?,
        "cohomology" => cmd_cohomology(
            &need(m.algebra_path.as_ref(), "algebra_path")?,
            dir,
            &params,
            yau,
            m.degree.unwrap_or(2),
            mode,
        )?,
        "infinitesimal" => cmd_infinitesimal(
            &need(m.algebra_path.as_ref(), "algebra_path")?,
            dir,
            &params,
            yau,
            mode,
        )?,
        "extend" => cmd_extend(
            &resolve_path(dir, &need(m.deformation_path.as_ref(), "deformation_path")?),
            mode,
        )?,
        "obstruction" => cmd_obstruction(
            &resolve_path(dir, &need(m.deformation_path.as_ref(), "deformation_path")?),
            mode,
        )?,
        "versal-step" => cmd_versal_step(
            &resolve_path(dir, &need(m.deformation_path.as_ref(), "deformation_path")?),
            mode,
        )?,
        other => {
            return Err(Error::parse(
                "manifest.command",
                format!("unknown command \"{other}\""),
            ))
        }
    };
    render(report, exit, format, out)
}

fn dispatch(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Verify {
            algebra,
            base,
            output,
        } => {
            let params = parse_optional_params(algebra.params.as_deref())?;
            let (report, exit) = cmd_verify(
                &algebra.algebra,
                None,
                &params,
                algebra.yau_twist,
                base.as_deref(),
            )?;
            render(report, exit, output.format.into(), output.out)
        }
        Command::Cohomology {
            algebra,
            degree,
            mode,
            output,
        } => {
            let params = parse_optional_params(algebra.params.as_deref())?;
            let (report, exit) = cmd_cohomology(
                &algebra.algebra,
                None,
                &params,
                algebra.yau_twist,
                degree,
                mode.mode.into(),
            )?;
            render(report, exit, output.format.into(), output.out)
        }
        Command::Infinitesimal {
            algebra,
            mode,
            output,
        } => {
            let params = parse_optional_params(algebra.params.as_deref())?;
            let (report, exit) = cmd_infinitesimal(
                &algebra.algebra,
                None,
                &params,
                algebra.yau_twist,
                mode.mode.into(),
            )?;
            render(report, exit, output.format.into(), output.out)
        }
        Command::Extend {
            deformation,
            mode,
            output,
        } => {
            let (report, exit) = cmd_extend(&deformation, mode.mode.into())?;
            render(report, exit, output.format.into(), output.out)
        }
        Command::Obstruction {
            deformation,
            mode,
            output,
        } => {
            let (report, exit) = cmd_obstruction(&deformation, mode.mode.into())?;
            render(report, exit, output.format.into(), output.out)
        }
        Command::VersalStep {
            deformation,
            mode,
            output,
        } => {
            let (report, exit) = cmd_versal_step(&deformation, mode.mode.into())?;
            render(report, exit, output.format.into(), output.out)
        }
        Command::Run { manifest } => run_manifest(&manifest),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(output) => {
            match &output.path {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, output.text.as_bytes()) {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                }
                None => print!("{}", output.text),
            }
            ExitCode::from(output.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
