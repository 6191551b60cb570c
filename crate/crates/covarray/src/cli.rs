//! Argument parsing and the five subcommands. Exit codes: 0 pass, 1 fail,
//! 2 usage or parse error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use covarray_core::construct::{
    build_ca3_projective, build_ca4_full, build_ca4_half, default_ingredient, generator_matrix,
    half_generators, restrict_columns, CoveringArray, Provenance, CA3_PROJECTIVE, CA3_RESTRICTED,
    CA4_FULL, CA4_HALF,
};
use covarray_core::geometry::{
    build_full_plane, build_truncated_planes, check_anti_cocircular, run_lemma_suite,
};
use covarray_core::gf::{prime_power, BaseField, FieldTower, PrimePoly};
use covarray_core::verify::{
    brute_force_cost, cross_check, verify_matrix_coverage, verify_rank_cphf,
    verify_recursive_structure, CoverageReport, StructuralVerdict, BRUTE_FORCE_LIMIT,
    COVERAGE_GUARD, WITNESS_CAP,
};

use crate::format::{
    describe_tower, parse_ca, parse_rows_only, read_ca, verdict_line, write_ca, write_ca_file,
    write_plane, ROWS_ONLY,
};
use crate::{tables, Error, Result};

/// Odd prime powers with full construct-and-verify support.
pub const SUPPORTED_Q: [u32; 6] = [3, 5, 7, 9, 11, 13];
/// Ingredient name recorded for the built-in strength-3 ingredient.
pub const DEFAULT_INGREDIENT: &str = "default";

const WITNESS_PRINT: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "covarray",
    version,
    about = "Finite-geometry covering arrays: build, verify, inspect"
)]
pub struct Cli {
    /// Worker threads for verification and geometry checks.
    #[arg(long, global = true, env = "COVARRAY_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    /// Strength 3, k = q^2+q+1, N = 2q^3-1.
    Ca3,
    /// Strength 4, k = (q^2+1)/2, N = 3q^4-2.
    Ca4Half,
    /// Strength 4, k = q^2+1, recursive.
    Ca4Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Brute force when affordable, otherwise the construction's own engine.
    Auto,
    Brute,
    /// Rank certificate of the generators (ca3, ca4-half).
    Rank,
    /// Case analysis of the recursive array (ca4-full).
    Structural,
    /// Brute force and the construction engine, required to agree.
    Cross,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an array and write it in the native format.
    Construct {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(short)]
        q: u32,
        /// Tower polynomial, low degree first, comma separated; `/` then the
        /// base polynomial when q is not prime.
        #[arg(long)]
        poly: Option<String>,
        /// Strength-3 ingredient for ca4-full (native format).
        #[arg(long)]
        ingredient: Option<PathBuf>,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Allow q outside the supported set.
        #[arg(long)]
        force: bool,
    },
    /// Check the strength of an array file.
    Verify {
        path: PathBuf,
        #[arg(short)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
        /// Ingredient the array was built from, for the structural engine.
        #[arg(long)]
        ingredient: Option<PathBuf>,
        /// The file holds rows only; alphabet size from --v.
        #[arg(long, requires = "v")]
        rows_only: bool,
        #[arg(long)]
        v: Option<u32>,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
    },
    /// Difference set, Möbius planes, lemma checks and anti-cocircularity.
    Geometry {
        #[arg(short)]
        q: u32,
        #[arg(long)]
        poly: Option<String>,
        /// Directory for plane dumps.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Size tables for odd prime powers up to 25.
    Tables,
    /// Describe the field tower GF(q^m).
    FieldInfo {
        #[arg(short)]
        q: u32,
        #[arg(short, default_value_t = 4)]
        m: u32,
        #[arg(long)]
        poly: Option<String>,
    },
}

/// Largest q accepted by `geometry` without `--force`.
pub const GEOMETRY_MAX_Q: u32 = 13;

/// Parses `args` and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match dispatch(cli.command, out, err) {
        Ok(pass) => i32::from(!pass),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Construct {
            variant,
            q,
            poly,
            ingredient,
            output,
            force,
        } => cmd_construct(
            variant,
            q,
            poly.as_deref(),
            ingredient.as_deref(),
            output.as_deref(),
            force,
            out,
            err,
        ),
        Command::Verify {
            path,
            t,
            engine,
            ingredient,
            rows_only,
            v,
            lambda,
        } => cmd_verify(
            &path,
            t,
            engine,
            ingredient.as_deref(),
            rows_only.then_some(v).flatten(),
            lambda,
            out,
        ),
        Command::Geometry {
            q,
            poly,
            dump,
            force,
        } => cmd_geometry(q, poly.as_deref(), dump.as_deref(), force, out),
        Command::Tables => {
            write!(out, "{}", tables::render()).map_err(|e| Error::io("<stdout>", e))?;
            Ok(true)
        }
        Command::FieldInfo { q, m, poly } => cmd_field_info(q, m, poly.as_deref(), out),
    }
}

fn io_err(e: io::Error) -> Error {
    Error::io("<stdout>", e)
}

fn require_odd_prime_power(q: u32, force: bool, what: &str) -> Result<()> {
    match prime_power(q as u64) {
        Some((p, _)) if p != 2 => {}
        _ => {
            return Err(Error::Usage(format!(
                "q must be an odd prime power for {what}, got {q}"
            )))
        }
    }
    if !force && !SUPPORTED_Q.contains(&q) {
        return Err(Error::Usage(format!(
            "q = {q} is outside the supported set {SUPPORTED_Q:?} for {what}; pass --force to proceed"
        )));
    }
    Ok(())
}

/// Tower `GF(q^m)` from `q` and an optional polynomial token.
pub fn tower_for(q: u32, m: u32, poly: Option<&str>) -> Result<FieldTower> {
    let (p, e) = prime_power(q as u64)
        .ok_or_else(|| Error::Usage(format!("q = {q} is not a prime power")))?;
    let Some(token) = poly.filter(|t| !t.is_empty()) else {
        return Ok(FieldTower::build(p, e, m, None)?);
    };
    let (tower_coeffs, base_coeffs) = Provenance::parse_poly_token(token)?;
    let base = match base_coeffs {
        Some(c) => BaseField::with_poly(PrimePoly::new(p, c)?)?,
        None => BaseField::new(p, e)?,
    };
    if base.order() != q {
        return Err(Error::Usage(format!(
            "base polynomial does not define GF({q})"
        )));
    }
    Ok(FieldTower::over(base, m, Some(&tower_coeffs))?)
}

fn ingredient_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "ingredient".into())
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    variant: Variant,
    q: u32,
    poly: Option<&str>,
    ingredient: Option<&Path>,
    output: Option<&Path>,
    force: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool> {
    if ingredient.is_some() && variant != Variant::Ca4Full {
        return Err(Error::Usage("--ingredient applies to ca4-full only".into()));
    }
    let ca = match variant {
        Variant::Ca3 => {
            if prime_power(q as u64).is_none() {
                return Err(Error::Usage(format!("q must be a prime power, got {q}")));
            }
            if !force && q > 13 {
                return Err(Error::Usage(format!(
                    "q = {q} is above 13 for ca3; pass --force to proceed"
                )));
            }
            build_ca3_projective(&tower_for(q, 3, poly)?)?
        }
        Variant::Ca4Half => {
            require_odd_prime_power(q, force, "ca4-half")?;
            build_ca4_half(&tower_for(q, 4, poly)?)?
        }
        Variant::Ca4Full => {
            require_odd_prime_power(q, force, "ca4-full")?;
            let tower = tower_for(q, 4, poly)?;
            match ingredient {
                Some(path) => build_ca4_full(&tower, &read_ca(path)?, &ingredient_name(path))?,
                None => build_ca4_full(&tower, &default_ingredient(&tower)?, DEFAULT_INGREDIENT)?,
            }
        }
    };
    let summary = format!("CA({}; {}, {}, {})", ca.n(), ca.t(), ca.k(), ca.v());
    match output {
        Some(path) => {
            write_ca_file(path, &ca)?;
            writeln!(out, "{summary}").map_err(io_err)?;
        }
        None => {
            write_ca(&mut *out, &ca).map_err(io_err)?;
            writeln!(err, "{summary}").map_err(io_err)?;
        }
    }
    Ok(true)
}

/// Tower a provenance header refers to.
fn provenance_tower(p: &Provenance) -> Result<FieldTower> {
    let m = match p.construction.as_str() {
        CA3_PROJECTIVE | CA3_RESTRICTED => 3,
        CA4_HALF | CA4_FULL => 4,
        other => {
            return Err(Error::Usage(format!(
                "no construction engine for {other:?}"
            )))
        }
    };
    tower_for(p.q, m, Some(&p.poly))
}

fn rebuild_ingredient(
    ca: &CoveringArray,
    tower: &FieldTower,
    path: Option<&Path>,
) -> Result<CoveringArray> {
    if let Some(path) = path {
        return read_ca(path);
    }
    match ca.provenance().ingredient.as_deref() {
        Some(DEFAULT_INGREDIENT) | None => Ok(default_ingredient(tower)?),
        Some(name) => Err(Error::Usage(format!(
            "array was built from ingredient {name:?}; pass it with --ingredient"
        ))),
    }
}

fn print_coverage(out: &mut dyn Write, rep: &CoverageReport) -> io::Result<()> {
    writeln!(
        out,
        "brute force: {} column sets, lambda_min {}, {} missing tuple(s)",
        rep.subsets_checked, rep.lambda_min, rep.missing
    )?;
    for w in rep.witnesses.iter().take(WITNESS_PRINT) {
        writeln!(out, "  missing {:?} on columns {:?}", w.tuple, w.columns)?;
    }
    if rep.witnesses.len() > WITNESS_PRINT {
        writeln!(
            out,
            "  ... {} more listed in the report",
            rep.witnesses.len() - WITNESS_PRINT
        )?;
    }
    Ok(())
}

fn print_structural(out: &mut dyn Write, v: &StructuralVerdict) -> io::Result<usize> {
    match v {
        StructuralVerdict::Rank(c) => {
            writeln!(
                out,
                "rank: {} generator(s), {} column sets, {} uncovered",
                c.generators,
                c.sets_checked,
                c.uncovered_sets.len()
            )?;
            for s in c.uncovered_sets.iter().take(WITNESS_PRINT) {
                writeln!(out, "  uncovered columns {s:?}")?;
            }
            Ok(c.uncovered_sets.len().min(WITNESS_CAP))
        }
        StructuralVerdict::Recursive(r) => {
            let mut failing = 0;
            for case in r.cases() {
                writeln!(
                    out,
                    "structural: {}: {} ({} checks) {}",
                    case.name,
                    if case.pass { "pass" } else { "fail" },
                    case.checked,
                    case.note
                )?;
                if let Some(w) = &case.witness {
                    writeln!(out, "  witness columns {w:?}")?;
                    failing += 1;
                }
            }
            Ok(failing)
        }
    }
}

fn first_difference(a: &CoveringArray, b: &CoveringArray) -> Option<(usize, usize)> {
    if a.n() != b.n() || a.k() != b.k() {
        return Some((a.n().min(b.n()), 0));
    }
    let k = a.k();
    a.matrix()
        .data()
        .iter()
        .zip(b.matrix().data())
        .position(|(x, y)| x != y)
        .map(|i| (i / k, i % k))
}

fn construction_verdict(
    ca: &CoveringArray,
    t: usize,
    tower: &FieldTower,
    ingredient: Option<&CoveringArray>,
) -> Result<StructuralVerdict> {
    let base = tower.base();
    Ok(match ca.provenance().construction.as_str() {
        CA3_PROJECTIVE | CA3_RESTRICTED => {
            let gens = [
                generator_matrix(tower, 1, ca.k())?,
                generator_matrix(tower, -1, ca.k())?,
            ];
            StructuralVerdict::Rank(verify_rank_cphf(base, &gens, t, None)?)
        }
        CA4_HALF => {
            let gens = half_generators(tower)?;
            StructuralVerdict::Rank(verify_rank_cphf(base, &gens, t, None)?)
        }
        _ => StructuralVerdict::Recursive(verify_recursive_structure(
            tower,
            ingredient.expect("ca4-full needs its ingredient"),
        )?),
    })
}

fn rebuild(
    ca: &CoveringArray,
    tower: &FieldTower,
    ingredient: Option<&CoveringArray>,
) -> Result<CoveringArray> {
    let p = ca.provenance();
    let built = match p.construction.as_str() {
        CA3_PROJECTIVE => build_ca3_projective(tower)?,
        CA3_RESTRICTED => restrict_columns(&build_ca3_projective(tower)?, ca.k())?,
        CA4_HALF => build_ca4_half(tower)?,
        _ => build_ca4_full(
            tower,
            ingredient.expect("ca4-full needs its ingredient"),
            p.ingredient.as_deref().unwrap_or(DEFAULT_INGREDIENT),
        )?,
    };
    Ok(built)
}

fn cmd_verify(
    path: &Path,
    t: usize,
    engine: Engine,
    ingredient_path: Option<&Path>,
    rows_only_v: Option<u32>,
    lambda: u64,
    out: &mut dyn Write,
) -> Result<bool> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let ca = match rows_only_v {
        Some(v) => parse_rows_only(&text, t as u32, v)?,
        None => parse_ca(&text)?,
    };
    if t == 0 || t > ca.k() {
        return Err(Error::Usage(format!("t = {t} must be in 1..={}", ca.k())));
    }
    let clock = Instant::now();
    let construction = ca.provenance().construction.clone();
    let known = construction != ROWS_ONLY;
    let cells = (ca.v() as u64).checked_pow(t as u32).unwrap_or(u64::MAX);
    let affordable =
        brute_force_cost(ca.n(), ca.k(), t) <= BRUTE_FORCE_LIMIT && cells <= COVERAGE_GUARD;
    let engine = match engine {
        Engine::Auto if affordable || !known => Engine::Brute,
        Engine::Auto if construction == CA4_FULL => Engine::Structural,
        Engine::Auto => Engine::Rank,
        other => other,
    };
    if lambda != 1 && engine != Engine::Brute {
        return Err(Error::Usage(
            "--lambda other than 1 needs the brute-force engine".into(),
        ));
    }
    writeln!(
        out,
        "CA({}; {}, {}, {}) from {construction}",
        ca.n(),
        ca.t(),
        ca.k(),
        ca.v()
    )
    .map_err(io_err)?;
    writeln!(
        out,
        "engine: {}",
        engine.to_possible_value().unwrap().get_name()
    )
    .map_err(io_err)?;

    let (pass, lambda_min, witnesses) = match engine {
        Engine::Brute => {
            let rep = verify_matrix_coverage(ca.matrix(), ca.v(), t, lambda)?;
            print_coverage(out, &rep).map_err(io_err)?;
            (rep.pass(), rep.lambda_min, rep.witnesses.len())
        }
        Engine::Rank | Engine::Structural | Engine::Cross => {
            if !known {
                return Err(Error::Usage(
                    "rows-only arrays can only be checked by brute force".into(),
                ));
            }
            let fits = match engine {
                Engine::Rank => construction != CA4_FULL,
                Engine::Structural => construction == CA4_FULL,
                _ => true,
            };
            if !fits {
                return Err(Error::Usage(format!(
                    "engine {:?} does not apply to {construction}",
                    engine.to_possible_value().unwrap().get_name()
                )));
            }
            if t > ca.t() as usize {
                return Err(Error::Usage(format!(
                    "t = {t} exceeds the claimed strength {}; only brute force can test it",
                    ca.t()
                )));
            }
            let tower = provenance_tower(ca.provenance())?;
            let ingredient = if construction == CA4_FULL {
                Some(rebuild_ingredient(&ca, &tower, ingredient_path)?)
            } else {
                None
            };
            if engine == Engine::Cross {
                let rep = cross_check(&ca, t, &tower, ingredient.as_ref())?;
                print_coverage(out, &rep.coverage).map_err(io_err)?;
                print_structural(out, &rep.structural).map_err(io_err)?;
                if let Some(why) = &rep.explanation {
                    writeln!(out, "note: {why}").map_err(io_err)?;
                }
                writeln!(out, "engines agree: {}", rep.agree).map_err(io_err)?;
                (
                    rep.coverage.pass(),
                    rep.coverage.lambda_min,
                    rep.coverage.witnesses.len(),
                )
            } else {
                let rebuilt = rebuild(&ca, &tower, ingredient.as_ref())?;
                if let Some((r, c)) = first_difference(&ca, &rebuilt) {
                    writeln!(
                        out,
                        "file differs from its {construction} construction at row {r}, column {c}; \
                         the {} engine certifies the construction, not this file",
                        engine.to_possible_value().unwrap().get_name()
                    )
                    .map_err(io_err)?;
                    (false, 0, 0)
                } else {
                    writeln!(out, "file matches its {construction} construction")
                        .map_err(io_err)?;
                    let verdict = construction_verdict(&ca, t, &tower, ingredient.as_ref())?;
                    let w = print_structural(out, &verdict).map_err(io_err)?;
                    let pass = verdict.pass();
                    (pass, u64::from(pass), w)
                }
            }
        }
        Engine::Auto => unreachable!("resolved above"),
    };
    let ms = clock.elapsed().as_millis();
    writeln!(out, "{}", verdict_line(pass, t, lambda_min, witnesses, ms)).map_err(io_err)?;
    Ok(pass)
}

fn cmd_geometry(
    q: u32,
    poly: Option<&str>,
    dump: Option<&Path>,
    force: bool,
    out: &mut dyn Write,
) -> Result<bool> {
    match prime_power(q as u64) {
        Some((p, _)) if p != 2 => {}
        _ => {
            return Err(Error::Usage(format!(
                "q must be an odd prime power, got {q}"
            )))
        }
    }
    if q > GEOMETRY_MAX_Q && !force {
        return Err(Error::Usage(format!(
            "q = {q} is above the geometry bound {GEOMETRY_MAX_Q}; pass --force to proceed"
        )));
    }
    let clock = Instant::now();
    let tower = tower_for(q, 4, poly)?;
    writeln!(out, "tower: {}", describe_tower(&tower)).map_err(io_err)?;
    let lemmas = run_lemma_suite(&tower)?;
    for l in &lemmas.lemmas {
        write!(
            out,
            "{:<24} {} ({} checks)",
            l.name,
            if l.pass { "pass" } else { "FAIL" },
            l.checked
        )
        .map_err(io_err)?;
        match &l.counterexample {
            Some(c) => writeln!(out, " counterexample {c:?}"),
            None => writeln!(out),
        }
        .map_err(io_err)?;
    }
    let full = build_full_plane(&tower)?;
    let (m1, m2, mhalf) = build_truncated_planes(&full)?;
    writeln!(
        out,
        "full plane: {} points, {} circles",
        full.points().len(),
        full.circles().len()
    )
    .map_err(io_err)?;
    for p in [&m1, &m2, &mhalf] {
        writeln!(
            out,
            "{}: {} circles ({} with fewer than 3 points)",
            p.variant(),
            p.circles().len(),
            p.degenerate_count()
        )
        .map_err(io_err)?;
    }
    let anti = check_anti_cocircular(&m1, &m2, &mhalf)?;
    writeln!(
        out,
        "anti-cocircular: max triple intersection {} {} witness circles {:?} points {:?}",
        anti.max_intersection,
        if anti.pass() { "(<= 3)" } else { "(> 3)" },
        anti.witness,
        anti.witness_points
    )
    .map_err(io_err)?;
    if let Some(dir) = dump {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        for p in [&full, &m1, &m2, &mhalf] {
            let path = dir.join(format!("mobius-q{q}-{}.txt", p.variant()));
            let file = fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
            let mut w = io::BufWriter::new(file);
            write_plane(&mut w, p, &tower)
                .and_then(|()| w.flush())
                .map_err(|e| Error::io(&path, e))?;
        }
        writeln!(out, "planes written to {}", dir.display()).map_err(io_err)?;
    }
    let pass = lemmas.pass() && anti.pass();
    writeln!(
        out,
        "GEOMETRY {} q={q} max_intersection={} ms={}",
        if pass { "pass" } else { "fail" },
        anti.max_intersection,
        clock.elapsed().as_millis()
    )
    .map_err(io_err)?;
    Ok(pass)
}

fn cmd_field_info(q: u32, m: u32, poly: Option<&str>, out: &mut dyn Write) -> Result<bool> {
    let tower = tower_for(q, m, poly)?;
    let base = tower.base();
    let lines = [
        format!("descriptor: {}", describe_tower(&tower)),
        format!(
            "GF({q}) = GF({}^{}), base polynomial {}",
            base.p(),
            base.e(),
            base.poly()
        ),
        format!(
            "tower polynomial (low degree first): {}",
            Provenance::poly_token(&tower)
        ),
        format!("multiplicative group order: {}", tower.group_order()),
        format!("projective points: {}", tower.projective_points()),
        format!(
            "generator of GF({q})*: symbol {}",
            tower.subfield_primitive()
        ),
    ];
    for l in lines {
        writeln!(out, "{l}").map_err(io_err)?;
    }
    Ok(true)
}
