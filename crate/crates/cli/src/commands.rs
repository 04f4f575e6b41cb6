use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sigbasis::buchberger::groebner_witness;
use sigbasis::gvw::{signature_enumerate, AuditError};
use sigbasis::poly::text::format_polynomial;
use sigbasis::problem::parse_basis;
use sigbasis::{
    buchberger, buchberger_with, fglm as fglm_convert, gvw_run, parse_problem, BuchbergerConfig, GvwConfig, GvwError,
    MmmError, ModuleMonomial, ModuleOrderKind, MonomialOrder, PolyRing, Polynomial, Problem, ProblemError,
    SelectionStrategy, VarSet,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ProblemError },
    #[error(transparent)]
    Gvw(#[from] GvwError),
    #[error(transparent)]
    Mmm(#[from] MmmError),
    #[error("vector audit failed: {0}")]
    Audit(#[from] AuditError),
    #[error("{0}")]
    Usage(&'static str),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Gvw(GvwError::StepLimit(_)) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub struct GbOptions {
    pub input: PathBuf,
    pub algo_gvw: bool,
    pub order: Option<MonomialOrder>,
    pub sig_order: ModuleOrderKind,
    pub strategy: SelectionStrategy,
    pub syzygies: bool,
    pub track_vectors: bool,
    pub stats: bool,
    pub reduced: bool,
    pub step_limit: usize,
    pub criteria: bool,
    pub pair_syzygies: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path, order: Option<MonomialOrder>) -> Result<Problem, CliError> {
    let p = parse_problem(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(match order {
        Some(o) => p.with_order(o),
        None => p,
    })
}

fn write_basis(out: &mut String, basis: &[Polynomial], vars: &VarSet) {
    for g in basis {
        let _ = writeln!(out, "{}", format_polynomial(g, vars));
    }
}

fn report_zero_generators(out: &mut String, p: &Problem) {
    for (k, g) in p.generators.iter().enumerate() {
        if g.is_zero() {
            let _ = writeln!(out, "note: generator {} is zero and was dropped", k + 1);
        }
    }
}

fn relabel(s: &ModuleMonomial, positions: &[usize]) -> ModuleMonomial {
    ModuleMonomial {
        index: positions[s.index],
        mono: s.mono.clone(),
    }
}

fn format_vector(entries: &[Polynomial], vars: &VarSet) -> String {
    let parts: Vec<String> = entries.iter().map(|p| format_polynomial(p, vars)).collect();
    format!("({})", parts.join(", "))
}

pub fn gb(opt: &GbOptions) -> Result<Output, CliError> {
    let problem = load(&opt.input, opt.order)?;
    let ring = problem.ring();
    let (gens, positions) = problem.nonzero_generators();
    let vars = &problem.vars;
    let mut out = Output::default();
    report_zero_generators(&mut out.stderr, &problem);

    if !opt.algo_gvw {
        if opt.syzygies || opt.track_vectors {
            return Err(CliError::Usage("--syzygies and --track-vectors require --algo gvw"));
        }
        let (basis, stats) = buchberger_with(&ring, &gens, BuchbergerConfig { criteria: opt.criteria });
        let basis = if opt.reduced { ring.interreduce(&basis) } else { basis };
        write_basis(&mut out.stdout, &basis, vars);
        if opt.stats {
            out.stdout.push_str("# stats\n");
            out.stdout.push_str(&stats.to_block());
        }
        return Ok(out);
    }

    let cfg = GvwConfig {
        strategy: opt.strategy,
        track_vectors: opt.track_vectors,
        step_limit: opt.step_limit,
        pair_syzygies: opt.pair_syzygies,
        ..GvwConfig::default()
    };
    let state = gvw_run(ring, &gens, opt.sig_order, cfg)?;
    if opt.track_vectors {
        state.audit()?;
    }
    let raw = state.basis_polys();
    let basis = if opt.reduced { ring.interreduce(&raw) } else { raw };
    write_basis(&mut out.stdout, &basis, vars);

    if opt.syzygies {
        out.stdout.push_str("# syzygies\n");
        let m = problem.generators.len();
        let expand = |v: &[Polynomial]| {
            let mut full = vec![Polynomial::zero(); m];
            for (k, p) in v.iter().enumerate() {
                full[positions[k]] = p.clone();
            }
            full
        };
        for (k, g) in problem.generators.iter().enumerate() {
            if g.is_zero() {
                let _ = write!(out.stdout, "e{}", k + 1);
                if opt.track_vectors {
                    let mut unit = vec![Polynomial::zero(); m];
                    unit[k] = ring.one();
                    let _ = write!(out.stdout, ": {}", format_vector(&unit, vars));
                }
                out.stdout.push('\n');
            }
        }
        for rec in state.syzygies() {
            let _ = write!(
                out.stdout,
                "{}",
                relabel(&rec.lm, &positions).to_string_with(vars.names())
            );
            if let Some(v) = &rec.vector {
                let _ = write!(out.stdout, ": {}", format_vector(&expand(&v.0), vars));
            }
            out.stdout.push('\n');
        }
    }
    if opt.stats {
        out.stdout.push_str("# stats\n");
        out.stdout.push_str(&state.stats().to_block());
    }
    Ok(out)
}

pub fn fglm(input: &Path, to: MonomialOrder) -> Result<Output, CliError> {
    let problem = load(input, None)?;
    let ring = problem.ring();
    let (gens, _) = problem.nonzero_generators();
    let mut out = Output::default();
    report_zero_generators(&mut out.stderr, &problem);
    let gb = ring.interreduce(&buchberger(&ring, &gens));
    let converted = fglm_convert(&ring, &gb, to)?;
    write_basis(&mut out.stdout, &converted, &problem.vars);
    Ok(out)
}

pub fn verify(input: &Path, basis_path: &Path, order: Option<MonomialOrder>) -> Result<Output, CliError> {
    let problem = load(input, order)?;
    let ring: PolyRing = problem.ring();
    let vars = &problem.vars;
    let basis: Vec<Polynomial> = parse_basis(&read(basis_path)?, vars, &ring)
        .map_err(|source| CliError::Parse {
            path: basis_path.to_path_buf(),
            source,
        })?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    let mut out = Output::default();

    if let Some(w) = groebner_witness(&ring, &basis) {
        let s = ring.s_polynomial(&basis[w.i], &basis[w.j]);
        let _ = writeln!(
            out.stdout,
            "not a Groebner basis: S(g{}, g{}) = {} has remainder {}",
            w.i + 1,
            w.j + 1,
            format_polynomial(&s, vars),
            format_polynomial(&w.remainder, vars)
        );
        out.code = 1;
        return Ok(out);
    }
    for (k, f) in problem.generators.iter().enumerate() {
        let r = ring.normal_form(f, &basis);
        if !r.is_zero() {
            let _ = writeln!(
                out.stdout,
                "generator {} is not in the ideal of the basis: remainder {}",
                k + 1,
                format_polynomial(&r, vars)
            );
            out.code = 1;
            return Ok(out);
        }
    }
    let (gens, _) = problem.nonzero_generators();
    let reference = buchberger(&ring, &gens);
    for (k, g) in basis.iter().enumerate() {
        let r = ring.normal_form(g, &reference);
        if !r.is_zero() {
            let _ = writeln!(
                out.stdout,
                "basis element {} is not in the input ideal: remainder {}",
                k + 1,
                format_polynomial(&r, vars)
            );
            out.code = 1;
            return Ok(out);
        }
    }
    out.stdout.push_str("ok\n");
    Ok(out)
}

pub fn enumerate(
    input: &Path,
    deg_bound: u32,
    kind: ModuleOrderKind,
    order: Option<MonomialOrder>,
) -> Result<Output, CliError> {
    let problem = load(input, order)?;
    let ring = problem.ring();
    let (gens, positions) = problem.nonzero_generators();
    let mut out = Output::default();
    report_zero_generators(&mut out.stderr, &problem);
    for (k, g) in problem.generators.iter().enumerate() {
        if g.is_zero() {
            let _ = writeln!(out.stdout, "e{}", k + 1);
        }
    }
    for s in signature_enumerate(&ring, &gens, kind, deg_bound) {
        let _ = writeln!(
            out.stdout,
            "{}",
            relabel(&s, &positions).to_string_with(problem.vars.names())
        );
    }
    Ok(out)
}
