//! `antiassoc`: command-line front end over the exact computer-algebra
//! library for anti-associative structures.
//!
//! Every run prints one deterministic JSON report object
//! `{command, inputs, results, warnings}` on standard output (serde_json
//! maps are sorted, rationals are canonical strings). Exit codes: 0 on
//! success, 1 on domain errors (guards, preconditions, dimension
//! mismatches), 2 on malformed input (unreadable files, bad rationals,
//! unknown names). `--human` appends a short rendered summary after the
//! JSON. Relative output paths are resolved under `ANTIASSOC_OUT_DIR`
//! when that variable is set.

use antiassoc::algebra::{Algebra, IdentityKind, Nilindex, Witness};
use antiassoc::cohomology;
use antiassoc::error::CoreError;
use antiassoc::fixtures;
use antiassoc::free;
use antiassoc::homology::{self, SignConvention};
use antiassoc::io::{algebra_from_json, algebra_to_json, map_from_json, map_to_json};
use antiassoc::jj;
use antiassoc::multilinear::MultilinearMap;
use antiassoc::operads::{self, GeneratorSymmetry, OperadPresentation, Tree};
use antiassoc::operators;
use antiassoc::polar;
use antiassoc::rat::{parse_rat, rat_to_string, Rat};
use antiassoc::series::{self, KoszulVerdict, PowerSeries};
use antiassoc::subspace::Subspace;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "antiassoc",
    version,
    about = "Exact computer algebra for anti-associative algebras, their polarizations, homology, and operads"
)]
struct Cli {
    /// Append a human-readable summary after the JSON report.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check named multiplication identities on an algebra file.
    Check {
        file: PathBuf,
        /// One identity name (e.g. anti-associative); all nine when omitted.
        #[arg(long)]
        identity: Option<String>,
    },
    /// Free anti-associative algebra on k generators (dim k + k^2 + k^3).
    FreeAa {
        #[arg(short)]
        k: usize,
        /// Also write the algebra file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Free commutative anti-associative algebra on p generators.
    FreeComm {
        #[arg(short)]
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Free anticommutative anti-associative algebra on p generators.
    FreeAnticomm {
        #[arg(short)]
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree-d component dimension of the free Jacobi-Jordan algebra on p
    /// generators.
    FreeJjDim {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        d: usize,
    },
    /// Derivation spaces of an algebra file.
    Derivations {
        file: PathBuf,
        /// Anti-derivations (f(xy) + f(x)y + xf(y) = 0) instead of
        /// derivations.
        #[arg(long)]
        anti: bool,
        /// Inner anti-derivations L_x + R_x (requires --anti).
        #[arg(long)]
        inner: bool,
    },
    /// Split a multiplication into symmetric and antisymmetric parts and
    /// check the polarization identities.
    Polarize { file: PathBuf },
    /// Order-by-order residuals of a formal deformation.
    Deform {
        file: PathBuf,
        /// Bilinear deformation terms phi_1, phi_2, ... (repeatable).
        #[arg(long = "phi", required = true)]
        phis: Vec<PathBuf>,
        #[arg(long)]
        order: usize,
    },
    /// Check the anti-Poisson axioms on a (psi, rho) pair of files.
    AntiPoisson {
        #[arg(long)]
        psi: PathBuf,
        #[arg(long)]
        rho: PathBuf,
    },
    /// Homology of the word complex at a given degree.
    Homology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        /// symmetric (default) or alternating (the literal signed formula).
        #[arg(long, default_value = "symmetric")]
        convention: String,
    },
    /// Standard cohomology dimensions; --degree adds cocycle bases or the
    /// degree-3 falsification flags; --jj switches to the Jacobi-Jordan
    /// complex.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        jj: bool,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Component dimensions of a quadratic operad presentation.
    Operad {
        /// aass, jajo, jajo-dual, or free.
        #[arg(long)]
        preset: Option<String>,
        /// Custom presentation JSON (mutually exclusive with --preset).
        #[arg(long)]
        relations: Option<PathBuf>,
        #[arg(long = "max-arity", default_value_t = 5)]
        max_arity: usize,
    },
    /// Generating-series Koszulness test for a preset presentation.
    Koszul {
        #[arg(long)]
        preset: String,
        #[arg(long, default_value_t = 9)]
        order: usize,
    },
    /// Compositional inverse of a power series given by coefficients of
    /// t, t^2, ... or by operad component dimensions.
    SeriesInvert {
        /// Comma-separated rational coefficients of t, t^2, ...
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Comma-separated component dimensions, turned into the
        /// alternating exponential generating series.
        #[arg(long)]
        dims: Option<String>,
        #[arg(long)]
        order: usize,
    },
    /// List the bundled fixture algebras and verify file-format round
    /// trips.
    Catalog {
        /// Write every fixture as NAME.alg into this directory.
        #[arg(long = "write-dir")]
        write_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((report, human)) => {
            println!("{}", to_pretty(&report));
            if cli.human {
                println!("{human}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let kind = match &e {
                CoreError::MalformedRational(_) => "malformed-rational",
                CoreError::MalformedInput(_) => "malformed-input",
                CoreError::DimensionMismatch { .. } => "dimension-mismatch",
                CoreError::InvalidArgument(_) => "invalid-argument",
                CoreError::GuardExceeded(_) => "guard-exceeded",
                CoreError::Precondition(_) => "precondition",
            };
            let doc = json!({"error": {"kind": kind, "message": e.to_string()}});
            println!("{}", to_pretty(&doc));
            if e.is_malformed_input() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn report(command: &str, inputs: Value, results: Value, warnings: Vec<String>) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "warnings": warnings,
    })
}

/// FNV-1a 64-bit content digest, hex encoded.
fn fnv1a64(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

fn read_file(path: &Path) -> Result<(String, Value), CoreError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CoreError::MalformedInput(format!("cannot read {}: {e}", path.display()))
    })?;
    let digest = json!({
        "path": path.display().to_string(),
        "bytes": text.len(),
        "fnv1a64": fnv1a64(text.as_bytes()),
    });
    Ok((text, digest))
}

fn read_algebra(path: &Path) -> Result<(Algebra, Value), CoreError> {
    let (text, digest) = read_file(path)?;
    Ok((algebra_from_json(&text)?, digest))
}

fn read_map(path: &Path) -> Result<(MultilinearMap, Value), CoreError> {
    let (text, digest) = read_file(path)?;
    Ok((map_from_json(&text)?, digest))
}

/// Resolve a relative output path under ANTIASSOC_OUT_DIR when set.
fn out_path(p: &Path) -> PathBuf {
    match std::env::var_os("ANTIASSOC_OUT_DIR") {
        Some(dir) if p.is_relative() => PathBuf::from(dir).join(p),
        _ => p.to_path_buf(),
    }
}

fn write_text(path: &Path, text: &str) -> Result<PathBuf, CoreError> {
    let resolved = out_path(path);
    if let Some(parent) = resolved.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| {
                CoreError::InvalidArgument(format!(
                    "cannot create {}: {e}",
                    parent.display()
                ))
            })?;
        }
    }
    std::fs::write(&resolved, text).map_err(|e| {
        CoreError::InvalidArgument(format!("cannot write {}: {e}", resolved.display()))
    })?;
    Ok(resolved)
}

fn rat_strings(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(rat_to_string(c))).collect())
}

fn subspace_rows(s: &Subspace) -> Value {
    Value::Array(s.basis_rows().iter().map(|r| rat_strings(r)).collect())
}

/// Basis vectors of a subspace of vectorized endomorphisms, rendered as
/// dim x dim matrices.
fn subspace_matrices(s: &Subspace, dim: usize) -> Value {
    Value::Array(
        s.basis_rows()
            .iter()
            .map(|r| {
                Value::Array(
                    (0..dim)
                        .map(|i| rat_strings(&r[i * dim..(i + 1) * dim]))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn witness_json(w: &Option<Witness>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({"indices": w.indices, "defect": rat_strings(&w.defect)}),
    }
}

fn nilindex_json(n: Nilindex) -> Value {
    match n {
        Nilindex::Finite(k) => json!(k),
        Nilindex::Infinite => json!("infinite"),
    }
}

fn algebra_json_value(a: &Algebra) -> Value {
    serde_json::from_str(&algebra_to_json(a)).expect("algebra JSON parses")
}

fn map_json_value(m: &MultilinearMap) -> Value {
    serde_json::from_str(&map_to_json(m)).expect("map JSON parses")
}

fn series_json(s: &PowerSeries) -> Value {
    json!({
        "order": s.order,
        "coeffs": rat_strings(s.coeffs()),
        "display": s.to_string(),
    })
}

fn run(cmd: &Command) -> Result<(Value, String), CoreError> {
    match cmd {
        Command::Check { file, identity } => check_cmd(file, identity.as_deref()),
        Command::FreeAa { k, out } => {
            free_cmd("free-aa", *k, 4, out.as_deref(), free::free_anti_associative)
        }
        Command::FreeComm { p, out } => {
            free_cmd("free-comm", *p, 12, out.as_deref(), free::free_commutative_aa)
        }
        Command::FreeAnticomm { p, out } => free_cmd(
            "free-anticomm",
            *p,
            8,
            out.as_deref(),
            free::free_anticommutative_aa,
        ),
        Command::FreeJjDim { p, d } => free_jj_cmd(*p, *d),
        Command::Derivations { file, anti, inner } => derivations_cmd(file, *anti, *inner),
        Command::Polarize { file } => polarize_cmd(file),
        Command::Deform { file, phis, order } => deform_cmd(file, phis, *order),
        Command::AntiPoisson { psi, rho } => anti_poisson_cmd(psi, rho),
        Command::Homology {
            file,
            degree,
            convention,
        } => homology_cmd(file, *degree, convention),
        Command::Cohomology { file, jj, degree } => cohomology_cmd(file, *jj, *degree),
        Command::Operad {
            preset,
            relations,
            max_arity,
        } => operad_cmd(preset.as_deref(), relations.as_deref(), *max_arity),
        Command::Koszul { preset, order } => koszul_cmd(preset, *order),
        Command::SeriesInvert {
            coeffs,
            dims,
            order,
        } => series_invert_cmd(coeffs.as_deref(), dims.as_deref(), *order),
        Command::Catalog { write_dir } => catalog_cmd(write_dir.as_deref()),
    }
}

fn check_cmd(file: &Path, identity: Option<&str>) -> Result<(Value, String), CoreError> {
    let (a, digest) = read_algebra(file)?;
    let kinds: Vec<IdentityKind> = match identity {
        Some(name) => vec![IdentityKind::from_str(name)?],
        None => IdentityKind::ALL.to_vec(),
    };
    let mut items = Vec::new();
    let mut human_lines = Vec::new();
    for kind in &kinds {
        let r = a.check_identity(*kind);
        human_lines.push(format!("  {}: {}", kind, r.holds));
        items.push(json!({
            "identity": kind.name(),
            "holds": r.holds,
            "witness": witness_json(&r.witness),
        }));
    }
    let nilindex = a.nilindex();
    let results = json!({
        "algebra": {"dim": a.dim, "basis": a.basis},
        "identities": items,
        "nilindex": nilindex_json(nilindex),
    });
    let human = format!(
        "checked {} (dim {}):\n{}\n  nilindex: {}",
        file.display(),
        a.dim,
        human_lines.join("\n"),
        nilindex
    );
    let inputs = json!({"file": digest, "identity": identity});
    Ok((report("check", inputs, results, vec![]), human))
}

fn free_cmd(
    name: &str,
    gens: usize,
    guard: usize,
    out: Option<&Path>,
    build: fn(usize) -> Result<free::GradedAlgebra, CoreError>,
) -> Result<(Value, String), CoreError> {
    if gens > guard {
        return Err(CoreError::GuardExceeded(format!(
            "{name} tables are generated up to {guard} generators, got {gens}"
        )));
    }
    let g = build(gens)?;
    let mut results = json!({
        "generators": gens,
        "dim": g.dim(),
        "component_dims": g.component_dims(),
        "algebra": algebra_json_value(&g.algebra),
    });
    let mut human = format!(
        "{name} on {gens} generator(s): dim {} (by degree: {:?})",
        g.dim(),
        g.component_dims()
    );
    if let Some(path) = out {
        let written = write_text(path, &algebra_to_json(&g.algebra))?;
        results["written"] = json!(written.display().to_string());
        human.push_str(&format!("; wrote {}", written.display()));
    }
    let inputs = json!({"generators": gens, "out": out.map(|p| p.display().to_string())});
    Ok((report(name, inputs, results, vec![]), human))
}

fn free_jj_cmd(p: usize, d: usize) -> Result<(Value, String), CoreError> {
    let dim = jj::free_jj_component_dim(p, d)?;
    let mut results = json!({"generators": p, "degree": d, "dim": dim});
    if d == 4 {
        results["nested_stage_dim"] = json!(jj::jj_nested_stage_dim(p));
    }
    let human = format!("free Jacobi-Jordan on {p} generator(s), degree {d}: dim {dim}");
    let inputs = json!({"generators": p, "degree": d});
    Ok((report("free-jj-dim", inputs, results, vec![]), human))
}

fn derivations_cmd(file: &Path, anti: bool, inner: bool) -> Result<(Value, String), CoreError> {
    let (a, digest) = read_algebra(file)?;
    if inner && !anti {
        return Err(CoreError::InvalidArgument(
            "--inner computes inner anti-derivations and requires --anti".into(),
        ));
    }
    let (space_name, space) = if inner {
        ("inner-anti-derivations", operators::inner_anti_derivations(&a)?)
    } else if anti {
        ("anti-derivations", operators::anti_derivation_space(&a))
    } else {
        ("derivations", operators::derivation_space(&a))
    };
    let results = json!({
        "space": space_name,
        "dim": space.dim(),
        "basis": subspace_matrices(&space, a.dim),
    });
    let human = format!("{space_name} of {}: dim {}", file.display(), space.dim());
    let inputs = json!({"file": digest, "anti": anti, "inner": inner});
    Ok((report("derivations", inputs, results, vec![]), human))
}

fn polarize_cmd(file: &Path) -> Result<(Value, String), CoreError> {
    let (a, digest) = read_algebra(file)?;
    let (psi, rho) = polar::polarize(&a);
    let checks = polar::check_polarization_identities(&a)?;
    let mut items = Vec::new();
    let mut warnings = Vec::new();
    let mut all_hold = true;
    for c in &checks {
        all_hold &= c.holds;
        if !c.holds {
            warnings.push(format!(
                "the printed identity '{}' fails on this algebra",
                c.name
            ));
        }
        items.push(json!({
            "name": c.name,
            "holds": c.holds,
            "witness": witness_json(&c.witness),
        }));
    }
    let results = json!({
        "psi": map_json_value(&psi),
        "rho": map_json_value(&rho),
        "checks": items,
    });
    let human = format!(
        "polarized {}: {} identity checks, all passing: {}",
        file.display(),
        checks.len(),
        all_hold
    );
    let inputs = json!({"file": digest});
    Ok((report("polarize", inputs, results, warnings), human))
}

fn deform_cmd(file: &Path, phi_paths: &[PathBuf], order: usize) -> Result<(Value, String), CoreError> {
    let (a, digest) = read_algebra(file)?;
    let mut phis = Vec::new();
    let mut phi_digests = Vec::new();
    for p in phi_paths {
        let (m, d) = read_map(p)?;
        phis.push(m);
        phi_digests.push(d);
    }
    let residuals = polar::deformation_residuals(&a, &phis, order)?;
    let mut items = Vec::new();
    let mut zero_through = 0usize;
    let mut all_zero = true;
    for (i, r) in residuals.iter().enumerate() {
        let z = r.is_zero();
        if all_zero && z {
            zero_through = i + 1;
        }
        all_zero &= z;
        items.push(json!({
            "order": i + 1,
            "zero": z,
            "residual": map_json_value(r),
        }));
    }
    let results = json!({"residuals": items});
    let human = format!(
        "deformation of {} with {} term(s): residuals vanish through order {zero_through} of {order}",
        file.display(),
        phis.len()
    );
    let inputs = json!({"file": digest, "phis": phi_digests, "order": order});
    Ok((report("deform", inputs, results, vec![]), human))
}

fn anti_poisson_cmd(psi_path: &Path, rho_path: &Path) -> Result<(Value, String), CoreError> {
    let (psi, psi_digest) = read_map(psi_path)?;
    let (rho, rho_digest) = read_map(rho_path)?;
    let triple = polar::AntiPoissonTriple::new(psi, rho)?;
    let r = polar::check_anti_poisson(&triple);
    let results = json!({
        "holds": r.holds,
        "rho_jacobi_jordan": {
            "holds": r.rho_jacobi_jordan.holds,
            "witness": witness_json(&r.rho_jacobi_jordan.witness),
        },
        "anti_leibniz": {
            "holds": r.anti_leibniz.holds,
            "witness": witness_json(&r.anti_leibniz.witness),
        },
    });
    let human = format!("anti-Poisson axioms hold: {}", r.holds);
    let inputs = json!({"psi": psi_digest, "rho": rho_digest});
    Ok((report("anti-poisson", inputs, results, vec![]), human))
}

fn homology_cmd(file: &Path, degree: usize, convention: &str) -> Result<(Value, String), CoreError> {
    let (a, digest) = read_algebra(file)?;
    let conv = SignConvention::from_str(convention)?;
    let r = homology::homology_report(&a, degree, conv)?;
    let results = json!({
        "degree": r.degree,
        "convention": conv.to_string(),
        "chain_dim": r.chain_dim,
        "ker_dim": r.ker_dim,
        "im_dim": r.im_dim,
        "containment_holds": r.containment_holds,
        "homology_dim": r.homology_dim,
        "ker_basis": subspace_rows(&r.ker_basis),
        "im_basis": subspace_rows(&r.im_basis),
    });
    let human = format!(
        "homology of {} at degree {degree} ({conv}): ker {}, im {}, H = {}",
        file.display(),
        r.ker_dim,
        r.im_dim,
        r.homology_dim.map_or("undefined".to_string(), |d| d.to_string()),
    );
    let inputs = json!({"file": digest, "degree": degree, "convention": convention});
    Ok((report("homology", inputs, results, r.warnings), human))
}

fn cohomology_cmd(file: &Path, jj: bool, degree: Option<usize>) -> Result<(Value, String), CoreError> {
    let (a, digest) = read_algebra(file)?;
    let inputs = json!({"file": digest, "jj": jj, "degree": degree});
    let mut warnings = Vec::new();
    if jj {
        let degree = degree.unwrap_or(2);
        let (results, human) = match degree {
            2 => {
                let z = cohomology::jj_symmetric_two_cocycles(&a)?;
                let n = a.dim;
                let results = json!({
                    "complex": "jacobi-jordan",
                    "degree": 2,
                    "symmetric_cochain_dim": n * n * (n + 1) / 2,
                    "cocycle_dim": z.dim(),
                    "cocycle_basis": subspace_rows(&z),
                });
                let human = format!(
                    "Jacobi-Jordan 2-cocycles of {}: dim {}",
                    file.display(),
                    z.dim()
                );
                (results, human)
            }
            3 => {
                let flags = cohomology::jj_delta3_after_delta2_vanishing(&a)?;
                for (i, ok) in flags.iter().enumerate() {
                    if !ok {
                        warnings.push(format!(
                            "symmetrized degree-3 component {} does not annihilate \
                             degree-2 coboundaries on this algebra",
                            i + 1
                        ));
                    }
                }
                let results = json!({
                    "complex": "jacobi-jordan",
                    "degree": 3,
                    "delta3_after_delta2_vanishes": flags.to_vec(),
                });
                let human = format!(
                    "Jacobi-Jordan delta3 after delta2 on {}: components vanish = {flags:?}",
                    file.display()
                );
                (results, human)
            }
            d => {
                return Err(CoreError::InvalidArgument(format!(
                    "the Jacobi-Jordan complex is implemented at degrees 2 and 3, got {d}"
                )))
            }
        };
        return Ok((report("cohomology", inputs, results, warnings), human));
    }
    let dims = cohomology::standard_cohomology_dims(&a)?;
    let mut results = json!({
        "complex": "standard",
        "h1": dims.h1,
        "h2": dims.h2,
        "z3": dims.z3,
        "rank_delta1": dims.rank_delta1,
        "rank_delta2": dims.rank_delta2,
    });
    match degree {
        None => {}
        Some(1) => {
            let z = cohomology::delta1_kernel(&a);
            results["cocycles"] = json!({
                "degree": 1,
                "dim": z.dim(),
                "basis": subspace_matrices(&z, a.dim),
            });
        }
        Some(2) => {
            let kernel = cohomology::delta2_matrix(&a).kernel_basis();
            results["cocycles"] = json!({
                "degree": 2,
                "dim": kernel.rows,
                "basis": Value::Array(
                    kernel.rows_vec().iter().map(|r| rat_strings(r)).collect()
                ),
            });
        }
        Some(3) => {
            let flags = cohomology::delta3_after_delta2_vanishing(&a)?;
            for (i, ok) in flags.iter().enumerate() {
                if !ok {
                    warnings.push(format!(
                        "degree-3 component {} does not annihilate degree-2 \
                         coboundaries on this algebra",
                        i + 1
                    ));
                }
            }
            results["delta3_after_delta2_vanishes"] = json!(flags.to_vec());
        }
        Some(d) => {
            return Err(CoreError::InvalidArgument(format!(
                "cocycle bases are available at degrees 1, 2, and 3, got {d}"
            )))
        }
    }
    let human = format!(
        "standard cohomology of {}: h1 = {}, h2 = {}, z3 = {}",
        file.display(),
        dims.h1,
        dims.h2,
        dims.z3
    );
    Ok((report("cohomology", inputs, results, warnings), human))
}

fn symmetry_name(s: GeneratorSymmetry) -> &'static str {
    match s {
        GeneratorSymmetry::NonSymmetric => "non-symmetric",
        GeneratorSymmetry::Commutative => "commutative",
        GeneratorSymmetry::AntiCommutative => "anti-commutative",
    }
}

fn parse_symmetry(s: &str) -> Result<GeneratorSymmetry, CoreError> {
    match s {
        "non-symmetric" => Ok(GeneratorSymmetry::NonSymmetric),
        "commutative" => Ok(GeneratorSymmetry::Commutative),
        "anti-commutative" => Ok(GeneratorSymmetry::AntiCommutative),
        other => Err(CoreError::MalformedInput(format!(
            "unknown generator symmetry '{other}' (expected non-symmetric, commutative, or anti-commutative)"
        ))),
    }
}

fn parse_tree(v: &Value) -> Result<Tree, CoreError> {
    match v {
        Value::Number(n) => {
            let label = n.as_u64().filter(|&l| l >= 1).ok_or_else(|| {
                CoreError::MalformedInput("tree leaves are positive integers".into())
            })?;
            Ok(Tree::Leaf(label as usize))
        }
        Value::Array(items) if items.len() == 2 => Ok(Tree::node(
            parse_tree(&items[0])?,
            parse_tree(&items[1])?,
        )),
        _ => Err(CoreError::MalformedInput(
            "trees are integers (leaves) or two-element arrays [left, right]".into(),
        )),
    }
}

/// Custom presentation JSON:
/// {"symmetry": "...", "relations": [[{"coeff": "p/q", "tree": ...}, ...], ...]}
fn parse_presentation(text: &str) -> Result<OperadPresentation, CoreError> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| CoreError::MalformedInput(format!("invalid presentation JSON: {e}")))?;
    let symmetry = parse_symmetry(
        doc.get("symmetry")
            .and_then(Value::as_str)
            .ok_or_else(|| CoreError::MalformedInput("missing \"symmetry\"".into()))?,
    )?;
    let rel_arr = doc
        .get("relations")
        .and_then(Value::as_array)
        .ok_or_else(|| CoreError::MalformedInput("missing \"relations\" array".into()))?;
    let mut relations = Vec::new();
    for rel in rel_arr {
        let terms = rel.as_array().ok_or_else(|| {
            CoreError::MalformedInput("each relation is an array of terms".into())
        })?;
        let mut parsed = Vec::new();
        for term in terms {
            let coeff = parse_rat(
                term.get("coeff").and_then(Value::as_str).ok_or_else(|| {
                    CoreError::MalformedInput("each term needs a \"coeff\" string".into())
                })?,
            )?;
            let tree = parse_tree(term.get("tree").ok_or_else(|| {
                CoreError::MalformedInput("each term needs a \"tree\"".into())
            })?)?;
            parsed.push((coeff, tree));
        }
        relations.push(parsed);
    }
    OperadPresentation::new(symmetry, relations)
}

/// Reference dimension values carried alongside the presets; computed
/// values are authoritative and disagreements surface as warnings.
fn reference_dims(preset: &str) -> Vec<(usize, usize)> {
    match preset {
        "aass" => vec![(1, 1), (2, 2), (3, 6), (4, 0), (5, 0)],
        "jajo" => vec![(2, 1), (3, 2), (4, 5), (5, 23)],
        "jajo-dual" => vec![(2, 1), (3, 1), (4, 0), (5, 0)],
        _ => vec![],
    }
}

fn operad_cmd(
    preset: Option<&str>,
    relations: Option<&Path>,
    max_arity: usize,
) -> Result<(Value, String), CoreError> {
    let (p, source, file_digest) = match (preset, relations) {
        (Some(_), Some(_)) => {
            return Err(CoreError::InvalidArgument(
                "--preset and --relations are mutually exclusive".into(),
            ))
        }
        (None, None) => {
            return Err(CoreError::InvalidArgument(
                "one of --preset or --relations is required".into(),
            ))
        }
        (Some(name), None) => (operads::preset(name)?, json!(name), Value::Null),
        (None, Some(path)) => {
            let (text, digest) = read_file(path)?;
            (parse_presentation(&text)?, json!("custom"), digest)
        }
    };
    let dims: Vec<usize> = (1..=max_arity)
        .map(|n| operads::component_dim(&p, n))
        .collect::<Result<_, _>>()?;
    let mut warnings = Vec::new();
    let mut reference = serde_json::Map::new();
    if let Some(name) = preset {
        for (arity, expected) in reference_dims(name) {
            reference.insert(arity.to_string(), json!(expected));
            if arity <= max_arity && dims[arity - 1] != expected {
                warnings.push(format!(
                    "computed arity-{arity} dimension {} differs from the reference value {expected}",
                    dims[arity - 1]
                ));
            }
        }
    }
    let mut results = json!({
        "source": source,
        "symmetry": symmetry_name(p.symmetry),
        "dims": dims,
    });
    if !reference.is_empty() {
        results["reference_dims"] = Value::Object(reference);
    }
    let human = format!(
        "operad component dimensions (arities 1..{max_arity}): {dims:?}{}",
        if warnings.is_empty() {
            String::new()
        } else {
            format!("; {} reference discrepancy(ies)", warnings.len())
        }
    );
    let inputs = json!({
        "preset": preset,
        "relations": file_digest,
        "max_arity": max_arity,
    });
    Ok((report("operad", inputs, results, warnings), human))
}

fn verdict_json(v: &KoszulVerdict) -> Value {
    match v {
        KoszulVerdict::NotKoszul { order, implied_dim } => json!({
            "koszul": "not-koszul",
            "order": order,
            "implied_dim": rat_to_string(implied_dim),
        }),
        KoszulVerdict::Inconclusive { checked_order } => json!({
            "koszul": "inconclusive",
            "checked_order": checked_order,
        }),
    }
}

fn koszul_cmd(preset: &str, order: usize) -> Result<(Value, String), CoreError> {
    check_order(order)?;
    let p = operads::preset(preset)?;
    let r = operads::koszul_sign_test(&p, order)?;
    let mut warnings = Vec::new();
    if let KoszulVerdict::NotKoszul { order, .. } = &r.verdict {
        if !r.obstruction_within_certified {
            warnings.push(format!(
                "the sign obstruction at order {order} assumes dual components above \
                 arity 5 vanish; the computed dual dimensions at arities 4 and 5 are \
                 {} and {}",
                r.dual_dims[3], r.dual_dims[4]
            ));
        }
    }
    let results = json!({
        "preset": preset,
        "primal_dims": r.primal_dims,
        "dual_dims": r.dual_dims,
        "dual_series": series_json(&r.dual_series),
        "inverse": series_json(&r.inverse),
        "implied_dims": rat_strings(&r.implied_dims),
        "verdict": verdict_json(&r.verdict),
        "obstruction_within_certified": r.obstruction_within_certified,
    });
    let human = match &r.verdict {
        KoszulVerdict::NotKoszul { order, implied_dim } => format!(
            "{preset}: not Koszul (order {order} implies dual dimension {})",
            rat_to_string(implied_dim)
        ),
        KoszulVerdict::Inconclusive { checked_order } => {
            format!("{preset}: inconclusive through order {checked_order}")
        }
    };
    let inputs = json!({"preset": preset, "order": order});
    Ok((report("koszul", inputs, results, warnings), human))
}

fn check_order(order: usize) -> Result<(), CoreError> {
    if order == 0 || order > 64 {
        return Err(CoreError::InvalidArgument(format!(
            "series order must be between 1 and 64, got {order}"
        )));
    }
    Ok(())
}

fn series_invert_cmd(
    coeffs: Option<&str>,
    dims: Option<&str>,
    order: usize,
) -> Result<(Value, String), CoreError> {
    check_order(order)?;
    let g = match (coeffs, dims) {
        (Some(_), Some(_)) => {
            return Err(CoreError::InvalidArgument(
                "--coeffs and --dims are mutually exclusive".into(),
            ))
        }
        (None, None) => {
            return Err(CoreError::InvalidArgument(
                "one of --coeffs or --dims is required".into(),
            ))
        }
        (Some(text), None) => {
            let mut terms = Vec::new();
            for (i, part) in text.split(',').enumerate() {
                terms.push((i + 1, parse_rat(part.trim())?));
            }
            PowerSeries::from_terms(order, &terms)
        }
        (None, Some(text)) => {
            let mut ds = Vec::new();
            for part in text.split(',') {
                ds.push(part.trim().parse::<usize>().map_err(|_| {
                    CoreError::MalformedInput(format!(
                        "component dimensions are nonnegative integers, got {part:?}"
                    ))
                })?);
            }
            series::generating_series(&ds, order)
        }
    };
    let inverse = g.compositional_inverse()?;
    let defining = g.compose(&inverse)?;
    let defining_holds = {
        let mut t = PowerSeries::zero(order);
        t.set_coeff(1, antiassoc::rat::rint(1));
        defining == t
    };
    let results = json!({
        "series": series_json(&g),
        "inverse": series_json(&inverse),
        "defining_equation_holds": defining_holds,
    });
    let human = format!("inverse: {inverse}");
    let inputs = json!({"coeffs": coeffs, "dims": dims, "order": order});
    Ok((report("series-invert", inputs, results, vec![]), human))
}

fn catalog_cmd(write_dir: Option<&Path>) -> Result<(Value, String), CoreError> {
    let fixtures = fixtures::catalog();
    let mut items = Vec::new();
    let mut round_trip = true;
    let mut written = Vec::new();
    for f in &fixtures {
        let text = algebra_to_json(&f.algebra);
        let back = algebra_from_json(&text)?;
        round_trip &= back == f.algebra && algebra_to_json(&back) == text;
        if let Some(dir) = write_dir {
            let path = write_text(&dir.join(format!("{}.alg", f.name)), &text)?;
            written.push(path.display().to_string());
        }
        items.push(json!({
            "name": f.name,
            "provenance": f.provenance,
            "parameters": f.parameters,
            "dim": f.algebra.dim,
            "basis": f.algebra.basis,
        }));
    }
    let mut results = json!({
        "count": fixtures.len(),
        "fixtures": items,
        "round_trip": round_trip,
    });
    if write_dir.is_some() {
        results["written"] = json!(written);
    }
    let human = format!(
        "{} fixtures; file-format round trip exact: {round_trip}",
        fixtures.len()
    );
    let inputs = json!({"write_dir": write_dir.map(|p| p.display().to_string())});
    Ok((report("catalog", inputs, results, vec![]), human))
}
