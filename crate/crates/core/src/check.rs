//! Cross-validation of the float, exact and decomposition pipelines.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::burnside::{character_table_float, FloatCharacterTable, FloatOptions};
use crate::cocycle::Multiplier;
use crate::decompose::{
    all_irreps_regular_with, average, commutator_residual, is_irreducible, random_hermitian,
    CharacterRows, DecomposeOptions, IrrepSet,
};
use crate::dixon::{
    character_table_exact, character_table_exact_with_prime, choose_prime_after,
    ExactCharacterTable,
};

/// Above this order the cubic class-factor sweep is skipped.
const PRODUCT_RULE_MAX_ORDER: usize = 200;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let tag = if item.passed { "ok  " } else { "FAIL" };
            writeln!(f, "[{tag}] {:<32} {}", item.name, item.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOptions {
    pub seed: u64,
    /// Float orthonormality tolerance.
    pub tol: f64,
    /// Tolerance for cross-pipeline character agreement.
    pub agree_tol: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            tol: 1e-8,
            agree_tol: 1e-6,
        }
    }
}

/// Largest entrywise difference between two tables after matching each
/// row of `a` greedily to its closest unused row of `b`; `None` if the
/// row counts differ or no row of matching length is left.
pub fn row_matched_distance(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for row in a {
        let (best, dist) = b
            .iter()
            .enumerate()
            .filter(|(j, other)| !used[*j] && other.len() == row.len())
            .map(|(j, other)| {
                let d = row
                    .iter()
                    .zip(other)
                    .map(|(x, y)| (x - y).norm())
                    .fold(0.0, f64::max);
                (j, d)
            })
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        used[best] = true;
        worst = worst.max(dist);
    }
    Some(worst)
}

/// Runs every pipeline on `mult` and records each invariant as a line item.
pub fn run_check(mult: &Arc<Multiplier>, opts: &CheckOptions) -> CheckReport {
    let mut report = CheckReport::default();
    let order = mult.group().order();

    match mult.validate() {
        Ok(()) => report.push("cocycle identity", true, "valid"),
        Err(e) => {
            report.push("cocycle identity", false, e.to_string());
            return report;
        }
    }
    let m = match mult.regular_class_data() {
        Ok(r) => r.len(),
        Err(e) => {
            report.push("regular classes", false, e.to_string());
            return report;
        }
    };
    report.push(
        "regular classes",
        true,
        format!("m = {m}, e = {}", mult.exponent()),
    );

    if order <= PRODUCT_RULE_MAX_ORDER {
        let bad = mult.class_factor_product_violations();
        report.push(
            "class factor product rule",
            bad == 0,
            format!("{bad} violations"),
        );
    }

    let float = character_table_float(
        mult,
        &FloatOptions {
            seed: opts.seed,
            ..FloatOptions::default()
        },
    );
    let float = match float {
        Ok(t) => {
            check_float(&mut report, &t, order, m, opts.tol);
            Some(t)
        }
        Err(e) => {
            report.push("float table", false, e.to_string());
            None
        }
    };

    let exact = match character_table_exact(mult) {
        Ok(t) => {
            check_exact(&mut report, &t, mult, order, m);
            Some(t)
        }
        Err(e) => {
            report.push("exact table", false, e.to_string());
            None
        }
    };

    if let (Some(f), Some(x)) = (&float, &exact) {
        let fv: Vec<Vec<Complex64>> = f.irreps.iter().map(|r| r.chars.clone()).collect();
        match row_matched_distance(&x.complex_values(), &fv) {
            Some(d) => report.push(
                "exact vs float characters",
                d <= opts.agree_tol,
                format!("max diff {d:.2e}"),
            ),
            None => report.push("exact vs float characters", false, "row counts differ"),
        }
    }

    let rows = match (&exact, &float) {
        (Some(x), _) => Some(CharacterRows::from(x)),
        (None, Some(f)) => Some(CharacterRows::from(f)),
        _ => None,
    };
    if let Some(rows) = rows {
        let dopts = DecomposeOptions::with_seed(opts.seed);
        match all_irreps_regular_with(mult.clone(), &rows, &dopts) {
            Ok(set) => check_irreps(
                &mut report,
                &set,
                &rows,
                float.as_ref(),
                order,
                m,
                &dopts,
                opts,
            ),
            Err(e) => report.push("regular decomposition", false, e.to_string()),
        }
    }
    report
}

fn check_float(
    report: &mut CheckReport,
    t: &FloatCharacterTable,
    order: usize,
    m: usize,
    tol: f64,
) {
    let sum: usize = t.irreps.iter().map(|r| r.degree * r.degree).sum();
    report.push(
        "float: sum of d^2",
        sum == order,
        format!("{sum} vs |G| = {order}"),
    );
    report.push(
        "float: irrep count",
        t.irreps.len() == m,
        format!("{} vs m = {m}", t.irreps.len()),
    );
    let row = t.row_orthonormality_error();
    report.push(
        "float: row orthonormality",
        row <= tol,
        format!("{row:.2e}"),
    );
    let col = t.column_orthogonality_error();
    report.push(
        "float: column orthogonality",
        col <= tol * order as f64,
        format!("{col:.2e}"),
    );
}

fn check_exact(
    report: &mut CheckReport,
    t: &ExactCharacterTable,
    mult: &Multiplier,
    order: usize,
    m: usize,
) {
    report.push(
        "exact: prime",
        true,
        format!("e = {}, p = {}, z = {}", t.e, t.p, t.z),
    );
    let sum: u64 = t.irreps.iter().map(|r| r.degree * r.degree).sum();
    report.push(
        "exact: sum of d^2",
        sum == order as u64,
        format!("{sum} vs |G| = {order}"),
    );
    report.push(
        "exact: irrep count",
        t.irreps.len() == m,
        format!("{} vs m = {m}", t.irreps.len()),
    );
    let bad = t.orthogonality_violations_modp();
    report.push(
        "exact: orthogonality mod p",
        bad == 0,
        format!("{bad} violations"),
    );
    let identity_ok = t.irreps.iter().all(|r| {
        let id = &r.chars[0].multiplicities;
        id[0] == r.degree && id[1..].iter().all(|&x| x == 0)
    });
    report.push("exact: identity multiplicities", identity_ok, "m_0 = d");
    let next = choose_prime_after(order, t.e, t.p);
    match character_table_exact_with_prime(mult, next.p) {
        Ok(t2) => report.push(
            "exact: next prime agrees",
            t2.multiplicity_rows() == t.multiplicity_rows(),
            format!("p' = {}", next.p),
        ),
        Err(e) => report.push("exact: next prime agrees", false, e.to_string()),
    }
}

#[allow(clippy::too_many_arguments)]
fn check_irreps(
    report: &mut CheckReport,
    set: &IrrepSet,
    rows: &CharacterRows,
    float: Option<&FloatCharacterTable>,
    order: usize,
    m: usize,
    dopts: &DecomposeOptions,
    opts: &CheckOptions,
) {
    let sum: usize = set.degrees().iter().map(|d| d * d).sum();
    report.push(
        "regular decomposition",
        set.len() == m && sum == order,
        format!("{} irreps, sum of d^2 = {sum}", set.len()),
    );
    let valid = set.irreps.iter().all(|e| e.rep.validate().is_ok());
    report.push("irreps: multiplier relation", valid, "validated");
    let irreducible = set.irreps.iter().all(|e| is_irreducible(&e.rep, dopts));
    report.push("irreps: irreducible", irreducible, "averaging test");
    let cf = set
        .irreps
        .iter()
        .map(|e| e.rep.class_function_residual())
        .fold(0.0, f64::max);
    report.push(
        "irreps: class function",
        cf <= opts.tol,
        format!("{cf:.2e}"),
    );

    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(opts.seed);
    let comm = set
        .irreps
        .iter()
        .map(|e| {
            let f = random_hermitian(e.rep.degree(), &mut rng);
            commutator_residual(&e.rep, &average(&e.rep, &f))
        })
        .fold(0.0, f64::max);
    report.push(
        "averaging commutes",
        comm <= opts.tol,
        format!("{comm:.2e}"),
    );

    let dv: Vec<Vec<Complex64>> = set
        .irreps
        .iter()
        .map(|e| {
            rows.class_reps
                .iter()
                .map(|&c| e.rep.matrix(c).trace())
                .collect()
        })
        .collect();
    match row_matched_distance(&dv, &rows.rows) {
        Some(d) => report.push(
            "decomposition vs table",
            d <= opts.agree_tol,
            format!("max diff {d:.2e}"),
        ),
        None => report.push("decomposition vs table", false, "row counts differ"),
    }
    if let Some(f) = float {
        let fv: Vec<Vec<Complex64>> = f.irreps.iter().map(|r| r.chars.clone()).collect();
        match row_matched_distance(&dv, &fv) {
            Some(d) => report.push(
                "decomposition vs float",
                d <= opts.agree_tol,
                format!("max diff {d:.2e}"),
            ),
            None => report.push("decomposition vs float", false, "row counts differ"),
        }
    }
}
