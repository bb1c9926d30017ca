//! Command implementations behind the `projrep` binary. Each command
//! returns its output as strings so it can be tested without a process.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use projrep::burnside::{character_table_float, FloatOptions};
use projrep::check::{run_check, CheckOptions, CheckReport};
use projrep::cocycle::Multiplier;
use projrep::decompose::{
    all_irreps_iterative, all_irreps_regular_with, CharacterRows, DecomposeOptions, IrrepSet,
};
use projrep::dixon::{character_table_exact, choose_prime};
use projrep::group::FiniteGroup;
use projrep::io::{parse_cocycle, parse_group, IrrepsFile};
use projrep::rep::{CMatrix, ProjectiveRep, RepJson, Side, DEFAULT_TOL};
use projrep::{Complex64, Error};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Strategy {
    Regular,
    Iterative,
}

/// Flags shared by every command.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Settings {
    pub seed: u64,
    pub tol: Option<f64>,
    pub max_group_order: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            seed: 0,
            tol: None,
            max_group_order: projrep::group::DEFAULT_MAX_ORDER,
        }
    }
}

impl Settings {
    fn float_options(&self) -> FloatOptions {
        let mut o = FloatOptions {
            seed: self.seed,
            ..FloatOptions::default()
        };
        if let Some(t) = self.tol {
            o.residual_tol = t;
        }
        o
    }

    fn decompose_options(&self) -> DecomposeOptions {
        let mut o = DecomposeOptions::with_seed(self.seed);
        if let Some(t) = self.tol {
            o.scalar_tol = t;
        }
        o
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Group from `group_path` and multiplier from `cocycle_path` (trivial if absent).
pub fn load_inputs(
    group_path: &Path,
    cocycle_path: Option<&Path>,
    settings: &Settings,
) -> Result<Arc<Multiplier>, Error> {
    let group: Arc<FiniteGroup> =
        Arc::new(parse_group(&read(group_path)?, settings.max_group_order)?);
    let mult = match cocycle_path {
        Some(p) => parse_cocycle(&read(p)?, group)?,
        None => Multiplier::trivial(group),
    };
    Ok(Arc::new(mult))
}

#[derive(Serialize)]
struct ClassEntry {
    index: usize,
    representative: usize,
    size: usize,
    element_order: usize,
    regular: bool,
}

#[derive(Serialize)]
struct ClassesReport {
    order: usize,
    classes: Vec<ClassEntry>,
    m: usize,
    e: u64,
    p: u64,
    z: u64,
}

/// Conjugacy classes with α-regularity flags, `m`, `e` and the chosen `(p, z)`.
pub fn cmd_classes(mult: &Multiplier, json: bool) -> Result<String, Error> {
    let grp = mult.group();
    let classes: Vec<ClassEntry> = grp
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(index, c)| ClassEntry {
            index,
            representative: c.representative,
            size: c.len(),
            element_order: grp.element_order(c.representative),
            regular: mult.is_regular(c.representative),
        })
        .collect();
    let m = classes.iter().filter(|c| c.regular).count();
    let e = mult.exponent();
    let ctx = choose_prime(grp.order(), e);
    let report = ClassesReport {
        order: grp.order(),
        classes,
        m,
        e,
        p: ctx.p,
        z: ctx.z,
    };
    if json {
        return Ok(serde_json::to_string(&report)? + "\n");
    }
    let mut s = String::new();
    writeln!(s, "order {}", report.order).unwrap();
    writeln!(s, "class   rep  size  ord  regular").unwrap();
    for c in &report.classes {
        writeln!(
            s,
            "{:>5} {:>5} {:>5} {:>4}  {}",
            c.index,
            c.representative,
            c.size,
            c.element_order,
            if c.regular { "yes" } else { "no" }
        )
        .unwrap();
    }
    writeln!(
        s,
        "m = {}, e = {}, p = {}, z = {}",
        report.m, report.e, report.p, report.z
    )
    .unwrap();
    Ok(s)
}

/// Integers print bare, everything else with four decimals.
fn fmt_value(c: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 5e-10 { 0.0 } else { x };
    let (re, im) = (clean(c.re), clean(c.im));
    let part = |x: f64| {
        if (x - x.round()).abs() < 1e-9 {
            format!("{}", x.round() as i64)
        } else {
            format!("{x:.4}")
        }
    };
    match (re == 0.0, im == 0.0) {
        (_, true) => part(re),
        (true, false) => format!("{}i", part(im)),
        _ => format!(
            "{}{}{}i",
            part(re),
            if im < 0.0 { "-" } else { "+" },
            part(im.abs())
        ),
    }
}

fn pretty_table(class_reps: &[usize], sizes: &[usize], rows: &[(usize, Vec<Complex64>)]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(_, vals)| vals.iter().map(|&v| fmt_value(v)).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain(class_reps.iter().map(|c| c.to_string().len()))
        .max()
        .unwrap_or(1)
        .max(4);
    let mut s = String::new();
    write!(s, "{:>5} {:>4} |", "class", "").unwrap();
    for c in class_reps {
        write!(s, " {c:>width$}").unwrap();
    }
    writeln!(s).unwrap();
    write!(s, "{:>5} {:>4} |", "size", "").unwrap();
    for c in sizes {
        write!(s, " {c:>width$}").unwrap();
    }
    writeln!(s).unwrap();
    for (i, ((d, _), row)) in rows.iter().zip(&cells).enumerate() {
        write!(s, "{i:>5} {d:>4} |").unwrap();
        for v in row {
            write!(s, " {v:>width$}").unwrap();
        }
        writeln!(s).unwrap();
    }
    s
}

/// Character table as `(json, pretty)`.
pub fn cmd_chartab(
    mult: &Multiplier,
    mode: Mode,
    settings: &Settings,
) -> Result<(String, String), Error> {
    match mode {
        Mode::Exact => {
            let t = character_table_exact(mult)?;
            let rows: Vec<_> = t
                .irreps
                .iter()
                .map(|r| r.degree as usize)
                .zip(t.complex_values())
                .collect();
            let mut pretty = format!("e = {}, p = {}, z = {}\n", t.e, t.p, t.z);
            pretty += &pretty_table(&t.regular_class_reps, &t.class_sizes, &rows);
            Ok((serde_json::to_string(&t)? + "\n", pretty))
        }
        Mode::Float => {
            let t = character_table_float(mult, &settings.float_options())?;
            let rows: Vec<_> = t
                .irreps
                .iter()
                .map(|r| (r.degree, r.chars.clone()))
                .collect();
            let pretty = pretty_table(&t.class_reps, &t.class_sizes, &rows);
            Ok((serde_json::to_string(&t)? + "\n", pretty))
        }
    }
}

fn character_rows(mult: &Multiplier, settings: &Settings) -> Result<CharacterRows, Error> {
    match character_table_exact(mult) {
        Ok(t) => Ok(CharacterRows::from(&t)),
        Err(_) => Ok(CharacterRows::from(&character_table_float(
            mult,
            &settings.float_options(),
        )?)),
    }
}

/// All irreps as `(json, summary)`. The iterative strategy starts from
/// `pi` when given, otherwise from the left regular representation.
pub fn cmd_irreps(
    mult: &Arc<Multiplier>,
    strategy: Strategy,
    pi: Option<&RepJson>,
    settings: &Settings,
) -> Result<(String, String), Error> {
    let opts = settings.decompose_options();
    let rows = character_rows(mult, settings)?;
    let set: IrrepSet = match strategy {
        Strategy::Regular => all_irreps_regular_with(mult.clone(), &rows, &opts)?,
        Strategy::Iterative => {
            let tol = settings.tol.unwrap_or(DEFAULT_TOL);
            let mut set = match pi {
                Some(json) => {
                    let rep = ProjectiveRep::with_tol(mult.clone(), json.to_matrices(), tol)?;
                    all_irreps_iterative(&rep, &[], &opts)?
                }
                None => {
                    // The regular representation already contains every irrep,
                    // so the trivial character is a sufficient linear set.
                    let reg = ProjectiveRep::regular(mult.clone(), Side::Left);
                    let lin = Arc::new(Multiplier::trivial(mult.group().clone()));
                    let trivial = ProjectiveRep::new(
                        lin,
                        vec![CMatrix::identity(1, 1); mult.group().order()],
                    )?;
                    all_irreps_iterative(&reg, &[trivial], &opts)?
                }
            };
            set.match_rows(&rows, opts.match_tol)?;
            set
        }
    };
    let mut summary = String::new();
    for m in set.manifest() {
        let mult_s = m.multiplicity.map_or("-".to_string(), |x| x.to_string());
        let row_s = m.character_row.map_or("-".to_string(), |x| x.to_string());
        writeln!(
            summary,
            "irrep {}: degree {}, multiplicity {}, character row {}",
            m.index, m.degree, mult_s, row_s
        )
        .unwrap();
    }
    Ok((
        serde_json::to_string(&IrrepsFile::from(&set))? + "\n",
        summary,
    ))
}

pub fn cmd_check(mult: &Arc<Multiplier>, settings: &Settings) -> CheckReport {
    let mut opts = CheckOptions {
        seed: settings.seed,
        ..CheckOptions::default()
    };
    if let Some(t) = settings.tol {
        opts.tol = t;
    }
    run_check(mult, &opts)
}
