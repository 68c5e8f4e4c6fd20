//! Job manifests: one JSON file (or builtin name) describing one computation.

use homdef_core::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// A single-computation job description. Input paths are resolved relative
/// to the manifest file's directory; `output_path` is resolved against the
/// working directory.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct JobManifest {
    /// One of: verify, cohomology, infinitesimal, extend, obstruction,
    /// versal-step.
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra_path: Option<String>,
    /// Base file path or canonical name (`c1:<h>`, `trunc:<k>`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation_path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    /// Rational bindings substituted into parametric algebra templates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<BTreeMap<String, String>>,
    /// Replace the bracket by alpha∘bracket after substitution.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub yau_twist: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<String>,
    /// `json` (default) or `text`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
}

fn example(a: &str, b: &str, c: &str, yau: bool) -> JobManifest {
    let mut parameters = BTreeMap::new();
    parameters.insert("a".to_string(), a.to_string());
    parameters.insert("b".to_string(), b.to_string());
    parameters.insert("c".to_string(), c.to_string());
    JobManifest {
        command: "cohomology".to_string(),
        algebra_path: Some("builtin:parametric".to_string()),
        base_path: None,
        deformation_path: None,
        degree: Some(2),
        mode: None,
        parameters: Some(parameters),
        yau_twist: if yau { Some(true) } else { None },
        output_path: None,
        format: None,
    }
}

/// The bundled manifests. `example1` is the unipotent instance
/// (a,b,c) = (1,2,1); `example2` the nilpotent instance (1,0,0);
/// `example3` the Yau twist at (1,0,1). All three compute the degree-2
/// cohomology report in the default mode.
pub fn builtin_manifest(name: &str) -> Option<JobManifest> {
    match name {
        "example1" => Some(example("1", "2", "1", false)),
        "example2" => Some(example("1", "0", "0", false)),
        "example3" => Some(example("1", "0", "1", true)),
        _ => None,
    }
}

/// Loads a manifest from a builtin name or a JSON file. Returns the
/// manifest and the directory input paths resolve against (none for
/// builtins).
pub fn load_manifest(name_or_path: &str) -> Result<(JobManifest, Option<std::path::PathBuf>)> {
    if let Some(m) = builtin_manifest(name_or_path) {
        return Ok((m, None));
    }
    let path = Path::new(name_or_path);
    if !path.exists() {
        return Err(Error::parse(
            "manifest",
            format!(
                "\"{name_or_path}\" is neither a builtin manifest (example1, example2, example3) nor an existing file"
            ),
        ));
    }
    let manifest: JobManifest = homdef_core::io::read_json_file(path)?;
    Ok((manifest, path.parent().map(|p| p.to_path_buf())))
}
