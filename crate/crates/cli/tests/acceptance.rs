//! Acceptance suite: every criterion runs at its stated size, seed count
//! and time budget, and all comparisons are exact (tolerance zero).
//!
//! Run with `cargo test -p rowmotion-cli --test acceptance -- --nocapture`
//! to see one pass/fail line per criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rowmotion_cli::random::{random_chain_polytope_point, random_labeling};
use rowmotion_cli::suite::{
    counterexample_reproduces, primes_labeling, run_suite, Mutation, SuiteConfig,
};

use rowmotion_core::algebra::{Birational, Tropical};
use rowmotion_core::closed_form::PowerTable;
use rowmotion_core::dynamics::{self, Labeling};
use rowmotion_core::minors::MinorArray;
use rowmotion_core::paths::{
    enumerate_gr_collections, enumerate_interval_collections, w_interval_from, GrGraph,
};
use rowmotion_core::poset::{self, Cell, Interval, Rect};
use rowmotion_core::rsk;
use rowmotion_core::st_words;
use rowmotion_core::Rational;

fn criterion(number: usize, name: &str, budget: Duration, body: impl FnOnce()) {
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = started.elapsed();
    match outcome {
        Ok(()) => {
            println!("acceptance {number} ({name}): PASS in {elapsed:.2?}");
            assert!(
                elapsed <= budget,
                "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
            );
        }
        Err(payload) => {
            println!("acceptance {number} ({name}): FAIL after {elapsed:.2?}");
            resume_unwind(payload);
        }
    }
}

fn seed_for(rect: Rect, trial: u64) -> u64 {
    (rect.rows() as u64) * 1_000_003 + (rect.cols() as u64) * 10_007 + trial
}

fn rat(text: &str) -> Rational {
    text.parse().unwrap()
}

#[test]
fn acceptance_1_periodicity() {
    criterion(1, "periodicity", Duration::from_secs(10), || {
        for r in 2..=4 {
            for s in 2..=4 {
                let rect = Rect::new(r, s);
                for trial in 0..25 {
                    let x = random_labeling(rect, seed_for(rect, trial), 20);
                    let y = dynamics::transfer_inverse(&x, &Birational).unwrap();
                    let mut current = y.clone();
                    for _ in 0..r + s {
                        current = dynamics::rowmotion(&current, &Birational).unwrap();
                    }
                    assert_eq!(current, y, "{r}x{s} trial {trial}");
                }
            }
        }
    });
}

#[test]
fn acceptance_2_closed_form_vs_toggles() {
    criterion(2, "closed form vs toggles", Duration::from_secs(30), || {
        for r in 1..=4 {
            for s in 1..=4 {
                let rect = Rect::new(r, s);
                let period = (r + s) as i64;
                for trial in 0..5 {
                    let x = random_labeling(rect, seed_for(rect, trial), 20);
                    let table = PowerTable::new(&x).unwrap();
                    let mut orbit = dynamics::transfer_inverse(&x, &Birational).unwrap();
                    for k in 0..period {
                        assert_eq!(
                            table.power_labeling(-k).unwrap(),
                            orbit,
                            "{r}x{s} exponent {}",
                            -k
                        );
                        orbit = dynamics::rowmotion_inverse(&orbit, &Birational).unwrap();
                    }
                    // One full period of positive exponents as well.
                    let mut forward = dynamics::transfer_inverse(&x, &Birational).unwrap();
                    for k in 1..=period {
                        forward = dynamics::rowmotion(&forward, &Birational).unwrap();
                        assert_eq!(table.power_labeling(k).unwrap(), forward);
                    }
                }
            }
        }
    });
}

#[test]
fn acceptance_3_worked_example() {
    criterion(3, "printed worked example", Duration::from_secs(1), || {
        let x = primes_labeling();
        let table = PowerTable::new(&x).unwrap();
        let cell = Cell::new(2, 2);
        let expected: [(i64, &str); 5] = [
            (0, "112"),
            (-1, "1170"),
            (-2, "1/10"),
            (-3, "37/385"),
            (-4, "1/91"),
        ];
        let mut orbit = dynamics::transfer_inverse(&x, &Birational).unwrap();
        for (k, printed) in expected {
            assert_eq!(table.power(cell, k).unwrap(), rat(printed), "exponent {k}");
            assert_eq!(orbit.get(cell), &rat(printed), "toggle route, exponent {k}");
            orbit = dynamics::rowmotion_inverse(&orbit, &Birational).unwrap();
        }
    });
}

#[test]
fn acceptance_4_lgv_and_octahedron() {
    criterion(4, "LGV and octahedron", Duration::from_secs(60), || {
        // Every solid minor equals the brute-force family weight.
        for r in 1..=6usize {
            for s in 1..=6usize {
                if r + s > 7 {
                    continue;
                }
                let rect = Rect::new(r, s);
                let x = random_labeling(rect, seed_for(rect, 0), 20);
                let g = GrGraph::new(&x).unwrap();
                let w = g.minor_array();
                let n = r + s;
                for k in 1..=3.min(n) {
                    for i in 1..=n - k + 1 {
                        for j in 1..=n - k + 1 {
                            let total = enumerate_gr_collections(&g, i, j, k)
                                .unwrap()
                                .iter()
                                .fold(Rational::zero(), |acc, c| &acc + &c.weight(&g));
                            assert_eq!(
                                w.get(i as i64, j as i64, k as i64),
                                total,
                                "{r}x{s} minor ({i}, {j}, {k})"
                            );
                        }
                    }
                }
            }
        }
        // Recurrence checks on ten seeded labelings per size.
        for r in 1..=4 {
            for s in 1..=4 {
                let rect = Rect::new(r, s);
                for trial in 0..10 {
                    let x = random_labeling(rect, seed_for(rect, trial), 20);
                    let w = GrGraph::new(&x).unwrap().minor_array();
                    assert!(w.octahedron_violations().is_empty(), "{r}x{s} trial {trial}");
                    assert!(
                        w.array_toggle_violations().is_empty(),
                        "{r}x{s} trial {trial}"
                    );
                }
            }
        }
        // Desnanot-Jacobi on 100 random integer matrices of size <= 6.
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xACCE97);
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
            assert!(
                w.octahedron_violations().is_empty(),
                "integer matrix {round}"
            );
        }
    });
}

#[test]
fn acceptance_5_chain_shifting() {
    criterion(5, "chain shifting", Duration::from_secs(30), || {
        // The printed instance at the primes.
        let primes = primes_labeling();
        let rect = primes.rect();
        let w = GrGraph::new(&primes).unwrap().minor_array();
        let band = Interval::new(rect, 1, 2, 2, 3).unwrap();
        assert_eq!(w_interval_from(&w, rect, band, 1).unwrap(), rat("1170"));
        assert!(rsk::chain_shift_violations(&primes).unwrap().is_empty());

        for r in 1..=4 {
            for s in 1..=4 {
                let rect = Rect::new(r, s);
                for trial in 0..10 {
                    let x = random_labeling(rect, seed_for(rect, trial), 20);
                    assert!(
                        rsk::chain_shift_violations(&x).unwrap().is_empty(),
                        "{r}x{s} trial {trial}"
                    );
                    assert!(
                        rsk::chain_shift_rsk_violations(&x).unwrap().is_empty(),
                        "rsk entries, {r}x{s} trial {trial}"
                    );
                }
            }
        }
    });
}

#[test]
fn acceptance_6_stanley_thomas() {
    criterion(6, "Stanley-Thomas words", Duration::from_secs(30), || {
        // Combinatorial words: exhaustively injective with s ones, rotating
        // one step right under rowmotion.
        for r in 1..=4 {
            for s in 1..=4 {
                let rect = Rect::new(r, s);
                let ideals = poset::enumerate_order_ideals(rect).unwrap();
                let mut seen = BTreeSet::new();
                for ideal in &ideals {
                    let word = poset::stanley_thomas_word(&ideal.maximal_antichain(), rect);
                    assert_eq!(word.iter().filter(|&&b| b == 1).count(), s);
                    let mut rotated = word.clone();
                    rotated.rotate_right(1);
                    assert_eq!(
                        poset::stanley_thomas_word(
                            &poset::rowmotion(ideal).maximal_antichain(),
                            rect
                        ),
                        rotated
                    );
                    seen.insert(word);
                }
                assert_eq!(seen.len(), ideals.len(), "injectivity on {r}x{s}");
            }
        }
        // Birational words: the classic word and every generalized word
        // rotate right; the chain form agrees with the orbit definition.
        for r in 1..=4 {
            for s in 1..=4 {
                let rect = Rect::new(r, s);
                for trial in 0..10 {
                    let x = random_labeling(rect, seed_for(rect, trial), 20);
                    assert!(
                        st_words::cyclic_shift_violations(&x).unwrap().is_empty(),
                        "{r}x{s} trial {trial}"
                    );
                    for i in 1..=r {
                        st_words::generalized_st(&x, st_words::WordKind::Row(i)).unwrap();
                    }
                    for j in 1..=s {
                        st_words::generalized_st(&x, st_words::WordKind::Col(j)).unwrap();
                    }
                }
            }
        }
    });
}

#[test]
fn acceptance_7_rsk_greene() {
    criterion(7, "RSK and border products", Duration::from_secs(60), || {
        let trop = Tropical::default();
        for r in 1..=4 {
            for s in 1..=4 {
                let rect = Rect::new(r, s);
                for trial in 0..10 {
                    let x = random_labeling(rect, seed_for(rect, trial), 20);
                    // Both routes, both algebra instances.
                    let image = rsk::birational_rsk(&x, &Birational).unwrap();
                    assert_eq!(rsk::rsk_by_file_toggles(&x, &Birational).unwrap(), image);
                    assert_eq!(
                        rsk::rsk_by_file_toggles(&x, &trop).unwrap(),
                        rsk::birational_rsk(&x, &trop).unwrap()
                    );
                    // Border identity at every admissible k.
                    assert!(
                        rsk::greene_violations(&x).unwrap().is_empty(),
                        "{r}x{s} trial {trial}"
                    );
                    // Right sides confirmed by the enumeration oracle on
                    // small rectangles.
                    if r <= 3 && s <= 3 && trial < 3 {
                        let w = GrGraph::new(&x).unwrap().minor_array();
                        for border in rect
                            .cells()
                            .filter(|c| c.i == rect.rows() || c.j == rect.cols())
                        {
                            let interval =
                                Interval::lower_left(rect, border.i, border.j).unwrap();
                            for k in 1..=border.i.min(border.j) {
                                let fast = w_interval_from(&w, rect, interval, k).unwrap();
                                let slow = enumerate_interval_collections(interval, k)
                                    .unwrap()
                                    .iter()
                                    .fold(Rational::zero(), |acc, c| &acc + &c.weight(&x));
                                assert_eq!(fast, slow);
                            }
                        }
                    }
                }
            }
        }
        // Tropical border identity at ten chain-polytope points of [3]x[3].
        let rect = Rect::new(3, 3);
        for trial in 0..10 {
            let point = random_chain_polytope_point(rect, 9_000 + trial, 20);
            assert!(
                rsk::tropical_greene_violations(&point, &trop)
                    .unwrap()
                    .is_empty(),
                "tropical point {trial}"
            );
        }
    });
}

#[test]
fn acceptance_8_reconstruction() {
    criterion(8, "reconstruction from chain sums", Duration::from_secs(30), || {
        for r in 1..=4 {
            for s in 1..=4 {
                let rect = Rect::new(r, s);
                for trial in 0..10 {
                    let x = random_labeling(rect, seed_for(rect, trial), 20);
                    let profile = rsk::chain_sum_profile(&x).unwrap();
                    assert_eq!(
                        rsk::reconstruct_from_chain_sums(&profile, rect).unwrap(),
                        x,
                        "{r}x{s} trial {trial}"
                    );
                }
            }
        }
    });
}

#[test]
fn acceptance_9_mutation_sensitivity() {
    criterion(9, "mutation sensitivity", Duration::from_secs(60), || {
        let base = SuiteConfig {
            r_max: 3,
            s_max: 3,
            trials: 3,
            seed: 5,
            bound: 20,
            suites: Some(
                ["dual_transfer", "closed_form", "rsk_greene"]
                    .into_iter()
                    .map(String::from)
                    .collect(),
            ),
            mutation: Mutation::None,
        };

        // Honest build: the three checks pass.
        let honest = run_suite(&base);
        assert!(honest.all_passed, "honest run must pass");

        // Parallel sum replaced by the ordinary sum: all three fail with
        // counterexamples that reproduce standalone.
        let mut mutated = base.clone();
        mutated.mutation = Mutation::ParallelSumAsSum;
        let report = run_suite(&mutated);
        assert_eq!(report.checks.len(), 3);
        for check in &report.checks {
            assert!(!check.passed, "{} must fail under the sum mutation", check.name);
            let payload = check.counterexample.as_ref().expect("counterexample payload");
            assert!(payload.get("labels").is_some(), "payload carries the labeling");
            assert!(
                counterexample_reproduces(&check.name, payload),
                "{} counterexample must reproduce",
                check.name
            );
        }

        // One transposed minor index: the minor-backed checks fail.
        let mut transposed = base.clone();
        transposed.mutation = Mutation::TransposeMinorIndex;
        transposed.suites = Some(
            ["closed_form", "rsk_greene"]
                .into_iter()
                .map(String::from)
                .collect(),
        );
        let report = run_suite(&transposed);
        assert_eq!(report.checks.len(), 2);
        for check in &report.checks {
            assert!(
                !check.passed,
                "{} must fail under the transposition mutation",
                check.name
            );
            assert!(check.counterexample.is_some());
        }
    });
}
