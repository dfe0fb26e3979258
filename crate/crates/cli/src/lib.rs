//! Command implementations behind the `powspec` binary.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 numerical mismatch.

pub mod args;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;
use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use powspec::closedforms::{
    complement_zpq_adjacency, complement_zpq_eta0, proper_dn_prime_power, q2_complement_example, zn_prime_power,
    ClosedFormSpectrum,
};
use powspec::groups::{complement_graph, Element, Family, GroupSpec, LabeledGraph};
use powspec::joinstruct::{build_join, definitional_graph, JoinStructure, Variant};
use powspec::numtheory::factorize;
use powspec::spectra::{
    charpoly_exact_with, complement_params, dense_eigen, hjoin_spectrum, max_value_gap,
    normalized_laplacian_charpoly_at, normalized_laplacian_charpoly_exact, params::format_rational, parse_rational,
    quotient_k, tridiagonal_eigenvalues, universal_matrix, verify_eigenpairs, ExactParams, Preset, Spectrum,
    UniversalParams, DEFAULT_TOL,
};
use powspec::Error;

use args::{CharpolyArgs, Cli, Command, Format, GraphArgs, ParamsArg, PresetArg, Selection, SpectrumArgs, VerifyArgs};
use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Largest order for which `charpoly --normalized` also runs exact elimination.
pub const EXACT_DET_MAX_ORDER: usize = 64;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Spectrum(a) => cmd_spectrum(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Charpoly(a) => cmd_charpoly(&a, out),
        Command::Graph(a) => cmd_graph(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

type CliResult = Result<i32, CliError>;

fn group_spec(sel: &Selection) -> Result<GroupSpec, Error> {
    GroupSpec::new(sel.group.into(), sel.n)
}

fn group_info(spec: &GroupSpec) -> GroupInfo {
    GroupInfo {
        family: spec.family().tag(),
        n: spec.n(),
        name: spec.to_string(),
        order: spec.order(),
    }
}

fn exact_params(arg: &ParamsArg) -> Result<ExactParams, Error> {
    match (&arg.params, arg.preset) {
        (Some(text), _) => text.parse(),
        (None, Some(p)) => Ok(ExactParams::preset(match p {
            PresetArg::Adjacency => Preset::Adjacency,
            PresetArg::Laplacian => Preset::Laplacian,
            PresetArg::Signless => Preset::SignlessLaplacian,
            PresetArg::Seidel => Preset::Seidel,
        })),
        (None, None) => Ok(ExactParams::preset(Preset::Adjacency)),
    }
}

fn params_info(p: &UniversalParams) -> ParamsInfo {
    ParamsInfo {
        alpha: Real(p.alpha()),
        beta: Real(p.beta()),
        gamma: Real(p.gamma()),
        eta: Real(p.eta()),
    }
}

/// The graph a command talks about, before any complement.
struct Instance {
    spec: GroupSpec,
    variant: Variant,
    graph: LabeledGraph,
    /// `Ok` when the join structure reproduces the graph.
    structure: Result<JoinStructure, Error>,
}

fn instance(sel: &Selection) -> Result<Instance, Error> {
    let spec = group_spec(sel)?;
    let variant: Variant = sel.variant.into();
    let graph = definitional_graph(&spec, variant)?;
    let structure = build_join(&spec, variant);
    if let Err(e) = &structure {
        if !matches!(e, Error::StructureMismatch(_)) {
            return Err(e.clone());
        }
    }
    Ok(Instance {
        spec,
        variant,
        graph,
        structure,
    })
}

/// A closed form whose target is exactly this graph, if one applies.
fn closed_form_for(
    inst: &Instance,
    complement: bool,
    base: &UniversalParams,
) -> Option<(&'static str, ClosedFormSpectrum)> {
    let n = inst.spec.n();
    let f = factorize(n).ok()?;
    let distinct_pq = match f.factors() {
        [(p, 1), (q, 1)] => Some((*p, *q)),
        _ => None,
    };
    let tagged = |tag: &'static str, c: powspec::Result<ClosedFormSpectrum>| c.ok().map(|c| (tag, c));
    match (inst.spec.family(), inst.variant, complement) {
        (Family::Cyclic, Variant::Power, false) => {
            let (p, r) = f.prime_power()?;
            tagged("zn-prime-power", zn_prime_power(p, r, base))
        }
        (Family::Cyclic, Variant::Power, true) => {
            let (p, q) = distinct_pq?;
            if *base == UniversalParams::adjacency() {
                tagged("complement-zpq-adjacency", complement_zpq_adjacency(p, q))
            } else {
                tagged("complement-zpq-eta0", complement_zpq_eta0(p, q, base))
            }
        }
        (Family::Dihedral, Variant::Proper, c) => {
            let (p, r) = f.prime_power()?;
            tagged("proper-dn-prime-power", proper_dn_prime_power(p, r, base, c))
        }
        (Family::Dicyclic, Variant::Power, true) if n == 2 => tagged("q2-complement", q2_complement_example(base)),
        _ => None,
    }
}

fn cmd_spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> CliResult {
    let start = Instant::now();
    let inst = instance(&a.selection)?;
    let base = exact_params(&a.params)?.to_f64()?;
    let order = inst.graph.vertex_count();
    let effective = if a.selection.complement {
        complement_params(&base, order)
    } else {
        base
    };
    let need_vectors = a.vectors || a.oracle_check;

    let (route, route_note, spectrum, labels): (&'static str, Option<String>, Spectrum, Vec<Element>) =
        match &inst.structure {
            Ok(js) => (
                "structural",
                None,
                hjoin_spectrum(js, &effective, need_vectors)?,
                js.vertex_labels(),
            ),
            Err(e) => {
                let u = universal_matrix(&inst.graph, &effective);
                (
                    "oracle",
                    Some(e.to_string()),
                    dense_eigen(&u, DEFAULT_TOL)?,
                    inst.graph.labels().to_vec(),
                )
            }
        };

    let mut code = EXIT_OK;
    let verification = if a.oracle_check {
        let graph = inst.graph.reordered_to(&labels).expect("same vertex set");
        let u = universal_matrix(&graph, &effective);
        let tolerance = a.tol * u.inf_norm().max(1.0);
        let check = verify_eigenpairs(&u, &spectrum, a.tol)?;
        let values = spectrum.values();
        let dense = match route {
            "structural" => dense_eigen(&u, DEFAULT_TOL)?.values(),
            _ => tridiagonal_eigenvalues(&u)?,
        };
        let dense_gap = max_value_gap(&values, &dense).unwrap_or(f64::INFINITY);
        let closed = closed_form_for(&inst, a.selection.complement, &base);
        let closed_gap = closed
            .as_ref()
            .map(|(_, c)| max_value_gap(&values, &c.values()).unwrap_or(f64::INFINITY));
        let pass = check.pass && dense_gap <= tolerance && closed_gap.is_none_or(|g| g <= tolerance);
        if !pass {
            code = EXIT_MISMATCH;
        }
        Some(Verification {
            max_residual: Real(check.max_residual),
            tolerance: Real(tolerance),
            dense_gap: Real(dense_gap),
            closed_form: closed.as_ref().map(|(tag, _)| *tag),
            closed_form_gap: closed_gap.map(Real),
            pass,
        })
    } else {
        None
    };

    let eigenspaces = spectrum
        .eigenspaces()
        .iter()
        .map(|e| EigenspaceInfo {
            value: Real(e.value),
            multiplicity: e.multiplicity,
            provenance: e.provenance.tag(),
            vectors: if a.vectors {
                e.basis.as_ref().map(|b| b.iter().map(|v| reals(v)).collect())
            } else {
                None
            },
        })
        .collect::<Vec<_>>();

    match a.format {
        Format::Json => {
            let report = SpectrumReport {
                schema: SCHEMA,
                command: "spectrum",
                group: group_info(&inst.spec),
                variant: inst.variant.tag(),
                complement: a.selection.complement,
                params: params_info(&base),
                effective_params: params_info(&effective),
                route,
                route_note,
                order,
                eigenspaces,
                vertex_order: a.vectors.then(|| labels.iter().map(|l| l.to_string()).collect()),
                verification,
                timing_ms: a.timing.then(|| Real(start.elapsed().as_secs_f64() * 1e3)),
            };
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "value,multiplicity,provenance")?;
            for e in &eigenspaces {
                writeln!(out, "{},{},{}", e.value.text(), e.multiplicity, e.provenance)?;
            }
        }
    }
    Ok(code)
}

/// Parameters on the dyadic grid `k / 8`, `|k| <= 32`, so that sums and
/// small-integer multiples stay exact in binary64. `alpha` avoids 0.
pub fn random_params(rng: &mut ChaCha8Rng) -> UniversalParams {
    let mut draw = || rng.gen_range(-32i32..=32) as f64 / 8.0;
    let mut alpha = draw();
    while alpha == 0.0 {
        alpha = draw();
    }
    let (beta, gamma, eta) = (draw(), draw(), draw());
    UniversalParams::new(alpha, beta, gamma, eta).expect("alpha != 0 and finite")
}

struct Tally<'a> {
    out: &'a mut dyn Write,
    passed: usize,
    failed: usize,
}

impl Tally<'_> {
    fn record(&mut self, sample: usize, name: &str, ok: bool, detail: String) -> std::io::Result<()> {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        writeln!(
            self.out,
            "{} sample={sample} check={name} {detail}",
            if ok { "PASS" } else { "FAIL" }
        )
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let inst = instance(&a.selection)?;
    let order = inst.graph.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    writeln!(
        out,
        "verify {} {}{} order={order} seed={} samples={}",
        inst.spec,
        inst.variant,
        if a.selection.complement { " complement" } else { "" },
        a.seed,
        a.samples
    )?;
    match &inst.structure {
        Ok(_) => writeln!(out, "structural route: validated")?,
        Err(e) => writeln!(out, "structural route: refused ({e}); running oracle-only checks")?,
    }
    let complement_graph_ = complement_graph(&inst.graph);
    let mut tally = Tally {
        out,
        passed: 0,
        failed: 0,
    };
    for sample in 1..=a.samples {
        let base = random_params(&mut rng);
        let effective = if a.selection.complement {
            complement_params(&base, order)
        } else {
            base
        };
        let u = universal_matrix(&inst.graph, &effective);
        let scale = u.inf_norm().max(1.0);
        let tol = a.tol * scale;
        tally
            .out
            .write_all(format!("sample={sample} params={base}\n").as_bytes())?;

        let dense = dense_eigen(&u, DEFAULT_TOL)?;
        let r = verify_eigenpairs(&u, &dense, a.tol)?;
        tally.record(
            sample,
            "dense-residual",
            r.pass,
            format!("max={:e} tol={:e}", r.max_residual, r.tolerance),
        )?;

        let values = dense.values();
        let ql = tridiagonal_eigenvalues(&u)?;
        let gap = max_value_gap(&values, &ql).unwrap_or(f64::INFINITY);
        tally.record(sample, "dense-agreement", gap <= tol, format!("gap={gap:e}"))?;

        let trace_gap = (values.iter().sum::<f64>() - u.trace()).abs();
        tally.record(
            sample,
            "trace",
            trace_gap <= tol * order.max(1) as f64,
            format!("gap={trace_gap:e}"),
        )?;

        let fro = u.frobenius_norm().powi(2);
        let fro_gap = (values.iter().map(|x| x * x).sum::<f64>() - fro).abs();
        tally.record(
            sample,
            "frobenius",
            fro_gap <= a.tol * fro.max(1.0),
            format!("gap={fro_gap:e}"),
        )?;

        let lhs = universal_matrix(&complement_graph_, &base);
        let rhs = universal_matrix(&inst.graph, &complement_params(&base, order));
        let identity_ok = if a.selection.complement { lhs == u } else { lhs == rhs };
        tally.record(sample, "complement-identity", identity_ok, "exact".into())?;

        if let Ok(js) = &inst.structure {
            let s = hjoin_spectrum(js, &effective, true)?;
            let gap = max_value_gap(&s.values(), &values).unwrap_or(f64::INFINITY);
            tally.record(
                sample,
                "oracle-equivalence",
                gap <= tol,
                format!("gap={gap:e} tol={tol:e}"),
            )?;
            let ordered = inst.graph.reordered_to(&js.vertex_labels()).expect("same vertex set");
            let r = verify_eigenpairs(&universal_matrix(&ordered, &effective), &s, a.tol)?;
            tally.record(
                sample,
                "structural-residual",
                r.pass,
                format!("max={:e}", r.max_residual),
            )?;
        }
    }
    let (passed, failed) = (tally.passed, tally.failed);
    writeln!(out, "summary: {passed} passed, {failed} failed")?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_charpoly(a: &CharpolyArgs, out: &mut dyn Write) -> CliResult {
    let inst = instance(&a.selection)?;
    let order = inst.graph.vertex_count();
    if a.normalized {
        let at_text = a.at.as_deref().expect("clap requires --at");
        let at = parse_rational(at_text)?;
        let graph = if a.selection.complement {
            complement_graph(&inst.graph)
        } else {
            inst.graph.clone()
        };
        let value = normalized_laplacian_charpoly_at(&graph, at.to_f64().ok_or(Error::NonRational)?)?;
        let exact = if order <= EXACT_DET_MAX_ORDER {
            Some(format_rational(&normalized_laplacian_charpoly_exact(&graph, &at)?))
        } else {
            None
        };
        let report = NormalizedReport {
            schema: SCHEMA,
            command: "charpoly",
            mode: "normalized",
            group: group_info(&inst.spec),
            variant: inst.variant.tag(),
            complement: a.selection.complement,
            at: format_rational(&at),
            value: Real(value),
            exact,
        };
        serde_json::to_writer_pretty(&mut *out, &report)?;
        writeln!(out)?;
        return Ok(EXIT_OK);
    }

    let js = inst.structure.clone()?;
    let base = exact_params(&a.params)?;
    let effective = if a.selection.complement {
        base.complement(order)
    } else {
        base.clone()
    };
    let q = quotient_k(&js, &effective.to_f64()?);
    let poly = charpoly_exact_with(&q, &effective)?;
    let roots = a.roots.then(|| {
        poly.real_roots()
            .into_iter()
            .map(|(value, multiplicity)| RootInfo {
                value: Real(value),
                multiplicity,
            })
            .collect()
    });
    let report = QuotientPolyReport {
        schema: SCHEMA,
        command: "charpoly",
        mode: "quotient",
        group: group_info(&inst.spec),
        variant: inst.variant.tag(),
        complement: a.selection.complement,
        params: ExactParamsInfo {
            alpha: format_rational(&base.alpha),
            beta: format_rational(&base.beta),
            gamma: format_rational(&base.gamma),
            eta: format_rational(&base.eta),
        },
        block_labels: q.labels().iter().map(|l| l.to_string()).collect(),
        block_sizes: q.sizes().to_vec(),
        degree: poly.degree().unwrap_or(0),
        coefficients: poly.descending().iter().map(format_rational).collect(),
        roots,
    };
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(EXIT_OK)
}

fn cmd_graph(a: &GraphArgs, out: &mut dyn Write) -> CliResult {
    let inst = instance(&a.selection)?;
    let graph = if a.selection.complement {
        complement_graph(&inst.graph)
    } else {
        inst.graph
    };
    if a.labels {
        for (i, l) in graph.labels().iter().enumerate() {
            writeln!(out, "# {i} {l}")?;
        }
    }
    out.write_all(graph.to_edge_list().as_bytes())?;
    Ok(EXIT_OK)
}
