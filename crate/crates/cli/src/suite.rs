//! The all-identities verification suite behind `rowmotion verify`.
//!
//! Every check evaluates exact identities at seeded random rational points;
//! any disagreement is a hard failure carrying the offending labeling as a
//! standalone-reproducible counterexample. A [`Mutation`] deliberately
//! miswires one ingredient so the suite's sensitivity can itself be tested.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use rowmotion_core::algebra::{Birational, ToggleAlgebra, Tropical};
use rowmotion_core::closed_form::{array_shift_violations, PowerTable};
use rowmotion_core::dynamics::{self, Labeling};
use rowmotion_core::minors::MinorArray;
use rowmotion_core::paths::{enumerate_gr_collections, w_interval_from, GrGraph};
use rowmotion_core::poset::{self, Cell, Interval, OrderIdeal, Rect};
use rowmotion_core::rational::parallel_sum;
use rowmotion_core::rsk;
use rowmotion_core::st_words;
use rowmotion_core::Rational;

use crate::json::{labeling_from_str, labels_map};
use crate::random::{random_chain_polytope_point, random_labeling};

/// A deliberate defect injected into the checks, for sensitivity testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Replace the parallel sum in toggles by the ordinary sum.
    ParallelSumAsSum,
    /// Swap the two position indices of every minor lookup.
    TransposeMinorIndex,
}

/// Suite parameters; identical configs give identical runs.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub r_max: usize,
    pub s_max: usize,
    pub trials: u64,
    pub seed: u64,
    /// Numerators and denominators of random labels are uniform in
    /// `1..=bound`.
    pub bound: u64,
    /// Subset of check names to run; `None` runs everything.
    pub suites: Option<BTreeSet<String>>,
    pub mutation: Mutation,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            r_max: 4,
            s_max: 4,
            trials: 10,
            seed: 1,
            bound: 20,
            suites: None,
            mutation: Mutation::None,
        }
    }
}

/// Outcome of one named check. Timing is kept out of the serialized form
/// so identical invocations emit byte-identical reports; the CLI prints it
/// on stderr instead.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    #[serde(skip)]
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

/// Machine-readable outcome of a whole run.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub all_passed: bool,
    pub checks: Vec<CheckReport>,
}

/// A failed identity with enough payload to reproduce it standalone.
pub struct Failure {
    pub labeling: Option<Labeling>,
    pub rect: Option<Rect>,
    pub seed: Option<u64>,
    pub detail: String,
}

impl Failure {
    fn of_labeling(x: &Labeling, seed: u64, detail: String) -> Failure {
        Failure {
            labeling: Some(x.clone()),
            rect: Some(x.rect()),
            seed: Some(seed),
            detail,
        }
    }

    fn plain(detail: String) -> Failure {
        Failure {
            labeling: None,
            rect: None,
            seed: None,
            detail,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let mut payload = serde_json::Map::new();
        if let Some(rect) = self.rect {
            payload.insert("r".into(), json!(rect.rows()));
            payload.insert("s".into(), json!(rect.cols()));
        }
        if let Some(seed) = self.seed {
            payload.insert("seed".into(), json!(seed));
        }
        if let Some(x) = &self.labeling {
            payload.insert("labels".into(), json!(labels_map(x)));
        }
        payload.insert("detail".into(), json!(self.detail));
        serde_json::Value::Object(payload)
    }
}

type CheckFn = fn(&SuiteConfig) -> Result<(), Failure>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("periodicity", check_periodicity),
    ("dual_transfer", check_dual_transfer),
    ("closed_form", check_closed_form),
    ("worked_example", check_worked_example),
    ("octahedron", check_octahedron),
    ("array_toggle", check_array_toggle),
    ("lgv", check_lgv),
    ("shift_array", check_shift_array),
    ("chain_shift", check_chain_shift),
    ("st_words", check_st_words),
    ("rsk_greene", check_rsk_greene),
    ("reconstruction", check_reconstruction),
];

/// Names of all available checks, in run order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

/// Runs the selected checks and collects a report. Failures are data, not
/// errors; the report's `all_passed` drives the process exit code.
pub fn run_suite(config: &SuiteConfig) -> VerificationReport {
    let mut checks = Vec::new();
    for (name, check) in CHECKS {
        if let Some(wanted) = &config.suites {
            if !wanted.contains(*name) {
                continue;
            }
        }
        let started = Instant::now();
        let outcome = check(config);
        let millis = started.elapsed().as_millis();
        checks.push(CheckReport {
            name: (*name).to_string(),
            passed: outcome.is_ok(),
            millis,
            counterexample: outcome.err().map(|f| f.to_json()),
        });
    }
    VerificationReport {
        all_passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn sizes(config: &SuiteConfig) -> Vec<Rect> {
    let mut out = Vec::new();
    for r in 1..=config.r_max.max(1) {
        for s in 1..=config.s_max.max(1) {
            out.push(Rect::new(r, s));
        }
    }
    out
}

fn trial_seed(config: &SuiteConfig, rect: Rect, trial: u64) -> u64 {
    let mut z = config
        .seed
        .wrapping_add(rect.rows() as u64)
        .wrapping_mul(0x9e3779b97f4a7c15)
        .wrapping_add(rect.cols() as u64)
        .wrapping_mul(0xbf58476d1ce4e5b9)
        .wrapping_add(trial);
    z ^= z >> 31;
    z
}

/// The deliberately wrong algebra: ordinary sum where the parallel sum
/// belongs.
struct SumAbove;

impl ToggleAlgebra for SumAbove {
    fn combine_below(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn combine_above(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn product(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn quotient(&self, a: &Rational, b: &Rational) -> Rational {
        a / b
    }
    fn unit_below(&self) -> Rational {
        Rational::one()
    }
    fn unit_above(&self) -> Rational {
        Rational::one()
    }
    fn check_value(&self, v: &Rational) -> rowmotion_core::error::Result<()> {
        Birational.check_value(v)
    }
}

/// The minor array queried by the closed-form and family-weight checks,
/// with the index transposition applied when the mutation asks for it.
fn minor_source(config: &SuiteConfig, x: &Labeling) -> Result<MinorArray, Failure> {
    let g = GrGraph::new(x).map_err(|e| Failure::plain(e.to_string()))?;
    let matrix = g.path_matrix();
    match config.mutation {
        Mutation::TransposeMinorIndex => {
            let n = matrix.len();
            let transposed: Vec<Vec<Rational>> = (0..n)
                .map(|i| (0..n).map(|j| matrix[j][i].clone()).collect())
                .collect();
            Ok(MinorArray::from_matrix(&transposed))
        }
        _ => Ok(MinorArray::from_matrix(&matrix)),
    }
}

fn check_periodicity(config: &SuiteConfig) -> Result<(), Failure> {
    let trials = config.trials.max(1);
    for rect in sizes(config) {
        let period = rect.rows() + rect.cols();
        for trial in 0..trials {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let y = dynamics::transfer_inverse(&x, &Birational)
                .map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?;
            let mut current = y.clone();
            for _ in 0..period {
                current = dynamics::rowmotion(&current, &Birational)
                    .map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?;
            }
            if current != y {
                return Err(Failure::of_labeling(
                    &x,
                    seed,
                    format!("rowmotion^{period} is not the identity"),
                ));
            }
        }
    }
    Ok(())
}

fn dual_transfer_inner<A: ToggleAlgebra>(
    config: &SuiteConfig,
    alg: &A,
) -> Result<(), Failure> {
    for rect in sizes(config) {
        for trial in 0..config.trials.max(1) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let fail = |detail: String| Failure::of_labeling(&x, seed, detail);
            let y = dynamics::transfer_inverse(&x, alg).map_err(|e| fail(e.to_string()))?;
            if dynamics::transfer(&y, alg).map_err(|e| fail(e.to_string()))? != x {
                return Err(fail("transfer round trip broke".into()));
            }
            let z = dynamics::dual_transfer_inverse(&x, alg).map_err(|e| fail(e.to_string()))?;
            if dynamics::dual_transfer(&z, alg).map_err(|e| fail(e.to_string()))? != x {
                return Err(fail("dual transfer round trip broke".into()));
            }
            let rho_y = dynamics::rowmotion(&y, alg).map_err(|e| fail(e.to_string()))?;
            for p in rect.cells() {
                if &(rho_y.get(p) * z.get(p)) != &Rational::one() {
                    return Err(fail(format!(
                        "rowmotion(transfer_inverse(x)) * dual_transfer_inverse(x) != 1 at ({}, {})",
                        p.i, p.j
                    )));
                }
            }
        }
    }
    Ok(())
}

fn check_dual_transfer(config: &SuiteConfig) -> Result<(), Failure> {
    match config.mutation {
        Mutation::ParallelSumAsSum => dual_transfer_inner(config, &SumAbove),
        _ => dual_transfer_inner(config, &Birational),
    }
}

fn closed_form_inner<A: ToggleAlgebra>(config: &SuiteConfig, alg: &A) -> Result<(), Failure> {
    for rect in sizes(config) {
        let period = (rect.rows() + rect.cols()) as i64;
        for trial in 0..config.trials.clamp(1, 5) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let fail = |detail: String| Failure::of_labeling(&x, seed, detail);
            let table = PowerTable::from_parts(rect, minor_source(config, &x)?);
            let mut orbit = dynamics::transfer_inverse(&x, alg).map_err(|e| fail(e.to_string()))?;
            for k in 0..period {
                let closed = table
                    .power_labeling(-k)
                    .map_err(|e| fail(format!("closed form failed at exponent {}: {e}", -k)))?;
                if closed != orbit {
                    return Err(fail(format!(
                        "closed form and toggle orbit disagree at exponent {}",
                        -k
                    )));
                }
                orbit = dynamics::rowmotion_inverse(&orbit, alg)
                    .map_err(|e| fail(e.to_string()))?;
            }
            // Periodicity of the dispatcher away from the base window.
            for cell in rect.cells() {
                for k in [-2 * period, -period - 1, period, 2 * period - 1] {
                    let a = table
                        .power(cell, k)
                        .map_err(|e| fail(format!("exponent {k}: {e}")))?;
                    let b = table
                        .power(cell, k + period)
                        .map_err(|e| fail(format!("exponent {}: {e}", k + period)))?;
                    if a != b {
                        return Err(fail(format!("period broke at exponent {k}")));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_closed_form(config: &SuiteConfig) -> Result<(), Failure> {
    match config.mutation {
        Mutation::ParallelSumAsSum => closed_form_inner(config, &SumAbove),
        _ => closed_form_inner(config, &Birational),
    }
}

/// The canonical worked example: primes 2, 3, 5, 7, 11, 13 on [2] x [3].
pub fn primes_labeling() -> Labeling {
    labeling_from_str(
        r#"{"r":2,"s":3,"labels":{"1,1":"2","2,1":"3","1,2":"5","2,2":"7","1,3":"11","2,3":"13"}}"#,
    )
    .expect("fixture parses")
}

fn check_worked_example(_config: &SuiteConfig) -> Result<(), Failure> {
    let x = primes_labeling();
    let fail = |detail: String| Failure::of_labeling(&x, 0, detail);
    let table = PowerTable::new(&x).map_err(|e| fail(e.to_string()))?;
    let cell = Cell::new(2, 2);
    let expected: [(i64, &str); 5] = [
        (0, "112"),
        (-1, "1170"),
        (-2, "1/10"),
        (-3, "37/385"),
        (-4, "1/91"),
    ];
    let mut orbit = dynamics::transfer_inverse(&x, &Birational).map_err(|e| fail(e.to_string()))?;
    for (k, printed) in expected {
        let want: Rational = printed.parse().expect("literal");
        let closed = table.power(cell, k).map_err(|e| fail(e.to_string()))?;
        if closed != want {
            return Err(fail(format!("closed form at exponent {k}: {closed} != {want}")));
        }
        if orbit.get(cell) != &want {
            return Err(fail(format!("toggle route at exponent {k} disagrees")));
        }
        orbit = dynamics::rowmotion_inverse(&orbit, &Birational)
            .map_err(|e| fail(e.to_string()))?;
    }
    Ok(())
}

fn check_octahedron(config: &SuiteConfig) -> Result<(), Failure> {
    for rect in sizes(config) {
        for trial in 0..config.trials.max(1) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let w = GrGraph::new(&x)
                .map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?
                .minor_array();
            if let Some(v) = w.octahedron_violations().first() {
                return Err(Failure::of_labeling(
                    &x,
                    seed,
                    format!("octahedron recurrence broke at ({}, {}, {})", v.i, v.j, v.k),
                ));
            }
        }
    }
    // Desnanot-Jacobi on random integer matrices, padding included.
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed ^ 0xD15C0);
    for round in 0..100 {
        let n = rng.gen_range(1..=6);
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Rational::from_int(rng.gen_range(-9..=9)))
                    .collect()
            })
            .collect();
        let w = MinorArray::from_matrix(&rows);
        if let Some(v) = w.octahedron_violations().first() {
            return Err(Failure::plain(format!(
                "Desnanot-Jacobi broke on integer matrix {round} at ({}, {}, {})",
                v.i, v.j, v.k
            )));
        }
    }
    Ok(())
}

fn check_array_toggle(config: &SuiteConfig) -> Result<(), Failure> {
    for rect in sizes(config) {
        for trial in 0..config.trials.max(1) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let w = GrGraph::new(&x)
                .map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?
                .minor_array();
            if let Some(v) = w.array_toggle_violations().first() {
                return Err(Failure::of_labeling(
                    &x,
                    seed,
                    format!("toggle relation broke at ({}, {}, {})", v.i, v.j, v.k),
                ));
            }
        }
    }
    Ok(())
}

fn check_lgv(config: &SuiteConfig) -> Result<(), Failure> {
    for rect in sizes(config) {
        let n = rect.rows() + rect.cols();
        if n > 7 {
            continue;
        }
        for trial in 0..config.trials.clamp(1, 2) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let fail = |detail: String| Failure::of_labeling(&x, seed, detail);
            let g = GrGraph::new(&x).map_err(|e| fail(e.to_string()))?;
            let w = g.minor_array();
            for k in 1..=3.min(n) {
                for i in 1..=n - k + 1 {
                    for j in 1..=n - k + 1 {
                        let families = enumerate_gr_collections(&g, i, j, k)
                            .map_err(|e| fail(e.to_string()))?;
                        let total = families
                            .iter()
                            .fold(Rational::zero(), |acc, c| &acc + &c.weight(&g));
                        if w.get(i as i64, j as i64, k as i64) != total {
                            return Err(fail(format!(
                                "minor ({i}, {j}, {k}) disagrees with path enumeration"
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_shift_array(config: &SuiteConfig) -> Result<(), Failure> {
    for rect in sizes(config) {
        for trial in 0..config.trials.clamp(1, 5) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let violations =
                array_shift_violations(&x).map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?;
            if let Some(v) = violations.first() {
                return Err(Failure::of_labeling(
                    &x,
                    seed,
                    format!("shifted array disagrees at ({}, {}, {})", v.i, v.j, v.k),
                ));
            }
        }
    }
    Ok(())
}

fn check_chain_shift(config: &SuiteConfig) -> Result<(), Failure> {
    // The printed instance: both band weights equal 1170 at the primes.
    let primes = primes_labeling();
    let rect = primes.rect();
    let w = GrGraph::new(&primes)
        .map_err(|e| Failure::plain(e.to_string()))?
        .minor_array();
    let band = Interval::new(rect, 1, 2, 2, 3).map_err(|e| Failure::plain(e.to_string()))?;
    let printed = w_interval_from(&w, rect, band, 1).map_err(|e| Failure::plain(e.to_string()))?;
    if printed != "1170".parse().expect("literal") {
        return Err(Failure::of_labeling(
            &primes,
            0,
            format!("printed band weight is {printed}, expected 1170"),
        ));
    }

    for rect in sizes(config) {
        for trial in 0..config.trials.max(1) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let shifts = rsk::chain_shift_violations(&x)
                .map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?;
            if let Some(v) = shifts.first() {
                return Err(Failure::of_labeling(&x, seed, v.detail.clone()));
            }
            let entries = rsk::chain_shift_rsk_violations(&x)
                .map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?;
            if let Some(v) = entries.first() {
                return Err(Failure::of_labeling(&x, seed, v.detail.clone()));
            }
        }
    }
    Ok(())
}

fn check_st_words(config: &SuiteConfig) -> Result<(), Failure> {
    // Combinatorial words: bijectivity and rotation, exhaustively.
    for r in 1..=config.r_max.min(4) {
        for s in 1..=config.s_max.min(4) {
            let rect = Rect::new(r, s);
            let ideals = poset::enumerate_order_ideals(rect)
                .map_err(|e| Failure::plain(e.to_string()))?;
            let mut words = BTreeSet::new();
            for ideal in &ideals {
                let word = poset::stanley_thomas_word(&ideal.maximal_antichain(), rect);
                if word.iter().filter(|&&b| b == 1).count() != s {
                    return Err(Failure::plain(format!(
                        "word of an ideal of [{r}] x [{s}] does not have {s} ones"
                    )));
                }
                let mut rotated = word.clone();
                rotated.rotate_right(1);
                let next =
                    poset::stanley_thomas_word(&poset::rowmotion(ideal).maximal_antichain(), rect);
                if next != rotated {
                    return Err(Failure::plain(format!(
                        "combinatorial word did not rotate right on [{r}] x [{s}]"
                    )));
                }
                words.insert(word);
            }
            if words.len() != ideals.len() {
                return Err(Failure::plain(format!(
                    "combinatorial word map is not injective on [{r}] x [{s}]"
                )));
            }
        }
    }

    for rect in sizes(config) {
        for trial in 0..config.trials.max(1) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let fail = |detail: String| Failure::of_labeling(&x, seed, detail);
            let rotations =
                st_words::cyclic_shift_violations(&x).map_err(|e| fail(e.to_string()))?;
            if let Some(v) = rotations.first() {
                return Err(fail(format!("{:?}: {}", v.kind, v.detail)));
            }
            for i in 1..=rect.rows() {
                st_words::generalized_st(&x, st_words::WordKind::Row(i))
                    .map_err(|e| fail(format!("row word {i}: {e}")))?;
            }
            for j in 1..=rect.cols() {
                st_words::generalized_st(&x, st_words::WordKind::Col(j))
                    .map_err(|e| fail(format!("column word {j}: {e}")))?;
            }
        }
    }
    Ok(())
}

fn rsk_greene_inner<A: ToggleAlgebra>(config: &SuiteConfig, alg: &A) -> Result<(), Failure> {
    for rect in sizes(config) {
        for trial in 0..config.trials.max(1) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let fail = |detail: String| Failure::of_labeling(&x, seed, detail);

            // The interval composition and the file-toggle scan agree, in
            // the chosen algebra and in the tropical one.
            let image = rsk::birational_rsk(&x, alg).map_err(|e| fail(e.to_string()))?;
            let scanned = rsk::rsk_by_file_toggles(&x, alg).map_err(|e| fail(e.to_string()))?;
            if image != scanned {
                return Err(fail("interval and file-toggle routes disagree".into()));
            }
            let trop = Tropical::default();
            let trop_image = rsk::birational_rsk(&x, &trop).map_err(|e| fail(e.to_string()))?;
            if trop_image != rsk::rsk_by_file_toggles(&x, &trop).map_err(|e| fail(e.to_string()))? {
                return Err(fail("tropical routes disagree".into()));
            }

            // Border identity with the (possibly miswired) minor source.
            let minors = minor_source(config, &x)?;
            let border = match config.mutation {
                Mutation::ParallelSumAsSum => greene_with_algebra(&x, alg, &minors),
                _ => rsk::greene_violations_with(&x, &minors)
                    .map_err(|e| fail(e.to_string()))
                    .map(|violations| {
                        violations
                            .first()
                            .map(|v| format!("border ({}, {}), k = {}", v.i, v.j, v.k))
                    }),
            }?;
            if let Some(detail) = border {
                return Err(fail(detail));
            }

            // Inversion round trip.
            let back = rsk::rsk_inverse(&image, alg).map_err(|e| fail(e.to_string()))?;
            if back != x {
                return Err(fail("inverse image does not return the labeling".into()));
            }
        }
    }

    // Tropical border identity at chain-polytope points of [3] x [3].
    let rect = Rect::new(3.min(config.r_max.max(1)), 3.min(config.s_max.max(1)));
    let trop = Tropical::default();
    for trial in 0..config.trials.max(1) {
        let seed = trial_seed(config, rect, trial ^ 0x7110);
        let point = random_chain_polytope_point(rect, seed, config.bound);
        let violations = rsk::tropical_greene_violations(&point, &trop)
            .map_err(|e| Failure::of_labeling(&point, seed, e.to_string()))?;
        if let Some(v) = violations.first() {
            return Err(Failure::of_labeling(
                &point,
                seed,
                format!("tropical border identity broke at ({}, {}), k = {}", v.i, v.j, v.k),
            ));
        }
    }
    Ok(())
}

/// Border products of the mutated RSK image against honest family weights.
fn greene_with_algebra<A: ToggleAlgebra>(
    x: &Labeling,
    alg: &A,
    minors: &MinorArray,
) -> Result<Option<String>, Failure> {
    let rect = x.rect();
    let image = rsk::birational_rsk(x, alg)
        .map_err(|e| Failure::of_labeling(x, 0, e.to_string()))?;
    for border in rect
        .cells()
        .filter(|c| c.i == rect.rows() || c.j == rect.cols())
    {
        let (i, j) = (border.i, border.j);
        let mut product = Rational::one();
        for k in 1..=i.min(j) {
            product = &product * image.get(Cell::new(i - k + 1, j - k + 1));
            let interval = Interval::lower_left(rect, i, j)
                .map_err(|e| Failure::of_labeling(x, 0, e.to_string()))?;
            let expected = w_interval_from(minors, rect, interval, k)
                .map_err(|e| Failure::of_labeling(x, 0, e.to_string()))?;
            if product != expected {
                return Ok(Some(format!("border ({i}, {j}), k = {k}")));
            }
        }
    }
    Ok(None)
}

fn check_rsk_greene(config: &SuiteConfig) -> Result<(), Failure> {
    match config.mutation {
        Mutation::ParallelSumAsSum => rsk_greene_inner(config, &SumAbove),
        _ => rsk_greene_inner(config, &Birational),
    }
}

fn check_reconstruction(config: &SuiteConfig) -> Result<(), Failure> {
    for rect in sizes(config) {
        for trial in 0..config.trials.max(1) {
            let seed = trial_seed(config, rect, trial);
            let x = random_labeling(rect, seed, config.bound);
            let profile =
                rsk::chain_sum_profile(&x).map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?;
            let recovered = rsk::reconstruct_from_chain_sums(&profile, rect)
                .map_err(|e| Failure::of_labeling(&x, seed, e.to_string()))?;
            if recovered != x {
                return Err(Failure::of_labeling(
                    &x,
                    seed,
                    "chain sums recovered a different labeling".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Sanity anchor for the sensitivity mutations themselves: the honest
/// algebra and the miswired one genuinely differ on a toggle.
pub fn mutation_is_effective() -> bool {
    let two = Rational::from_int(2);
    let three = Rational::from_int(3);
    parallel_sum(&two, &three).expect("positive") != SumAbove.combine_above(&two, &three)
}

/// Reruns the identity named by a counterexample payload, returning true
/// when the failure reproduces (used to validate emitted counterexamples).
pub fn counterexample_reproduces(check: &str, payload: &serde_json::Value) -> bool {
    let Some(labels) = payload.get("labels") else {
        return false;
    };
    let Some(r) = payload.get("r").and_then(|v| v.as_u64()) else {
        return false;
    };
    let Some(s) = payload.get("s").and_then(|v| v.as_u64()) else {
        return false;
    };
    let text = serde_json::json!({"r": r, "s": s, "labels": labels}).to_string();
    let Ok(x) = labeling_from_str(&text) else {
        return false;
    };
    // Rerun the honest identity on the payload; reproduction means the
    // mutated run failed while the honest identity holds (the defect is in
    // the mutation, not the data), or the honest identity itself fails.
    match check {
        "dual_transfer" => {
            let y = dynamics::transfer_inverse(&x, &Birational).unwrap();
            let z = dynamics::dual_transfer_inverse(&x, &Birational).unwrap();
            let rho_y = dynamics::rowmotion(&y, &Birational).unwrap();
            x.rect()
                .cells()
                .all(|p| (rho_y.get(p) * z.get(p)).is_one())
        }
        "closed_form" => {
            let table = PowerTable::new(&x).unwrap();
            table.power_labeling(0).unwrap()
                == dynamics::transfer_inverse(&x, &Birational).unwrap()
        }
        "rsk_greene" => rsk::greene_violations(&x).unwrap().is_empty(),
        _ => false,
    }
}

/// Combinatorial orbit structure of the ideals of a rectangle.
pub fn ideal_orbits(rect: Rect) -> Result<Vec<Vec<OrderIdeal>>, rowmotion_core::Error> {
    let ideals = poset::enumerate_order_ideals(rect)?;
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for ideal in ideals {
        let key = format!("{:?}", ideal.cells());
        if seen.contains(&key) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut current = ideal;
        loop {
            orbit.push(current);
            seen.insert(format!("{:?}", current.cells()));
            current = poset::rowmotion(&current);
            if current == ideal {
                break;
            }
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}
