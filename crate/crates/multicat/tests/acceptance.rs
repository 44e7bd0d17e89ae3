//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N ...: PASS/FAIL` line (run with `-- --nocapture` to see them
//! alongside per-profile detail).
//!
//! Criteria 1, 2, 3 and 7 assert witness attainment on grids that include
//! size-2 components. Attainment genuinely fails on some of those profiles
//! (a 2-state component reads its cycle and transposition as the same
//! toggle, leaving part of the valid state space unreachable; the smallest
//! case, two_letter at (2,3), reaches 11 of 12 valid states). Those tests
//! are therefore expected to fail, printing the exact counterexamples; every
//! profile with all sizes at least 3 attains. The bound-side criteria (4, 5,
//! 6), the construction oracle (8) and validity decoding (9) pass.

mod common;

use multicat::bounds::{
    brute_force_count, count_poly, formula_count, prefix_polys, recurrence_count,
    y_coeff_poly_by_compositions, y_coeff_poly_by_recurrence, z_coeff_poly_by_compositions,
    BigCount, SizeProfile,
};
use multicat::catenate;
use multicat::cli::verify_family;
use multicat::construct::determinize;
use multicat::poly::{MPoly, Var};
use multicat::witness::FamilyKind;
use multicat::Nfa;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::time::{Duration, Instant};

struct Attempt {
    sizes: Vec<usize>,
    measured: BigCount,
    expected: BigCount,
    valid_states: usize,
    reachable_states: usize,
}

fn run_family(kind: FamilyKind, profiles: &[Vec<usize>]) -> Vec<Attempt> {
    profiles
        .iter()
        .map(|sizes| {
            let profile = SizeProfile::new(sizes.clone()).unwrap();
            let outcome = verify_family(kind, &profile, 24).unwrap();
            Attempt {
                sizes: sizes.clone(),
                measured: outcome.report.measured_sc.clone().unwrap(),
                expected: outcome.report.bound_recurrence.clone().unwrap(),
                valid_states: outcome.valid_states,
                reachable_states: outcome.reachable_states,
            }
        })
        .collect()
}

fn sizes_str(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Prints the criterion line and panics on any miss, listing every
/// counterexample.
fn assert_attainment(criterion: &str, attempts: &[Attempt], elapsed: Duration, budget: Duration) {
    let misses: Vec<&Attempt> = attempts
        .iter()
        .filter(|a| a.measured != a.expected)
        .collect();
    let verdict = if misses.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "{criterion}: {verdict} - {}/{} profiles attained ({} ms)",
        attempts.len() - misses.len(),
        attempts.len(),
        elapsed.as_millis()
    );
    for miss in &misses {
        println!(
            "  counterexample: sizes=({}) measured={} bound={}",
            sizes_str(&miss.sizes),
            miss.measured,
            miss.expected
        );
    }
    assert!(
        elapsed <= budget,
        "{criterion}: exceeded time budget ({:?} > {:?})",
        elapsed,
        budget
    );
    assert!(
        misses.is_empty(),
        "{criterion}: {} of {} profiles missed the bound: {}",
        misses.len(),
        attempts.len(),
        misses
            .iter()
            .map(|m| format!(
                "({}) measured={} bound={}",
                sizes_str(&m.sizes),
                m.measured,
                m.expected
            ))
            .collect::<Vec<_>>()
            .join("; ")
    );
}

fn square_grid(lo: usize, hi: usize, alpha: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut sizes = vec![lo; alpha];
    'tuples: loop {
        out.push(sizes.clone());
        let mut pos = alpha;
        loop {
            if pos == 0 {
                break 'tuples;
            }
            pos -= 1;
            if sizes[pos] < hi {
                sizes[pos] += 1;
                break;
            }
            sizes[pos] = lo;
        }
    }
    out
}

#[test]
fn criterion_1_two_language_witness() {
    let start = Instant::now();
    let profiles = square_grid(2, 5, 2);
    let attempts = run_family(FamilyKind::TwoLetter, &profiles);
    // closed form m * 2^n - 2^(n-1)
    for attempt in &attempts {
        let (m, n) = (attempt.sizes[0], attempt.sizes[1]);
        let closed = BigCount::from(m) * (BigCount::from(1u32) << n) - (BigCount::from(1u32) << (n - 1));
        assert_eq!(attempt.expected, closed, "recurrence vs closed form at ({m},{n})");
    }
    assert_attainment(
        "criterion 1 (two-language witness, sizes [2,5]^2)",
        &attempts,
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_2_three_language_witness() {
    let start = Instant::now();
    let profiles = square_grid(2, 4, 3);
    let attempts = run_family(FamilyKind::ThreeLetter, &profiles);
    assert_attainment(
        "criterion 2 (three-language witness, sizes [2,4]^3)",
        &attempts,
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_3_extra_letter_family() {
    let start = Instant::now();
    let mut profiles = square_grid(2, 4, 2);
    profiles.extend(square_grid(2, 4, 3));
    let attempts = run_family(FamilyKind::Table1, &profiles);
    assert_attainment(
        "criterion 3 (extra-letter family, alpha 2..3, sizes [2,4])",
        &attempts,
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_4_bound_triple_agreement() {
    let start = Instant::now();
    let mut checked = 0;
    for alpha in 1..=4 {
        for sizes in square_grid(2, 4, alpha) {
            if sizes.iter().sum::<usize>() > 16 {
                continue;
            }
            let profile = SizeProfile::new(sizes.clone()).unwrap();
            let brute = brute_force_count(&profile).unwrap();
            let recurrence = recurrence_count(&profile);
            let formula = formula_count(&profile).unwrap();
            assert_eq!(brute, recurrence, "brute vs recurrence at ({})", sizes_str(&sizes));
            assert_eq!(formula, recurrence, "formula vs recurrence at ({})", sizes_str(&sizes));
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 4 (bound triple agreement): PASS - {checked} profiles, three methods equal ({} ms)",
        elapsed.as_millis()
    );
    assert!(elapsed <= Duration::from_secs(60));
}

fn x(i: usize) -> MPoly {
    MPoly::var(Var::X(i))
}

fn xs(indices: &[usize]) -> MPoly {
    indices.iter().fold(MPoly::one(), |acc, &i| &acc * &x(i))
}

fn frac(n: i64, d: i64) -> MPoly {
    MPoly::constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn combine(terms: Vec<(MPoly, MPoly, Var)>) -> MPoly {
    terms.into_iter().fold(MPoly::zero(), |acc, (c, m, v)| {
        &acc + &(&(&c * &m) * &MPoly::var(v))
    })
}

#[test]
fn criterion_5_polynomial_golden_values() {
    use Var::{Y, Z};
    let expected_r0 = combine(vec![
        (frac(2, 1), MPoly::one(), Y),
        (frac(1, 1), MPoly::one(), Z),
    ]);
    let expected_r1 = combine(vec![(frac(1, 1), x(1), Y), (frac(1, 1), x(1), Z)]);
    let expected_r2 = combine(vec![
        (frac(1, 1), MPoly::one(), Z),
        (frac(3, 2), xs(&[1, 2]), Y),
        (frac(3, 2), xs(&[1, 2]), Z),
        (frac(-1, 1), x(2), Z),
    ]);
    let expected_r3 = combine(vec![
        (frac(1, 1), x(1), Y),
        (frac(9, 4), xs(&[1, 2, 3]), Y),
        (frac(-1, 1), xs(&[1, 3]), Y),
        (frac(1, 1), x(1), Z),
        (frac(9, 4), xs(&[1, 2, 3]), Z),
        (frac(-3, 2), xs(&[2, 3]), Z),
        (frac(-1, 1), xs(&[1, 3]), Z),
        (frac(1, 1), x(3), Z),
    ]);
    assert_eq!(count_poly(1), expected_r0, "one-component polynomial");
    assert_eq!(count_poly(2), expected_r1, "two-component polynomial");
    assert_eq!(count_poly(3), expected_r2, "three-component polynomial");
    assert_eq!(count_poly(4), expected_r3, "four-component polynomial");
    println!("criterion 5 (polynomial golden values): PASS - 4 polynomials coefficient-exact");
}

#[test]
fn criterion_6_structural_identities() {
    let start = Instant::now();
    let polys = prefix_polys(9);

    // halved-total identity (needs the halved variable to exist)
    for alpha in 2..=8 {
        let shallow = prefix_polys(alpha);
        let sum = shallow
            .absent_final
            .iter()
            .fold(MPoly::zero(), |acc, p| &acc + p);
        assert_eq!(count_poly(alpha), sum, "absent-sum identity at alpha={alpha}");
    }
    // present level = sum of two adjacent absent levels
    for j in 1..=8 {
        assert_eq!(
            polys.present_final[j],
            &polys.absent_final[j] + &polys.absent_final[j - 1],
            "present split at level {j}"
        );
    }
    // composition sum vs recurrence, and coefficient extraction
    for i in 0..=8 {
        assert_eq!(
            y_coeff_poly_by_recurrence(i),
            y_coeff_poly_by_compositions(i),
            "y-route equality at level {i}"
        );
        assert_eq!(
            polys.absent_final[i].linear_coefficient(Var::Y),
            y_coeff_poly_by_compositions(i),
            "y coefficient at level {i}"
        );
        assert_eq!(
            polys.absent_final[i].linear_coefficient(Var::Z),
            z_coeff_poly_by_compositions(i),
            "z coefficient at level {i}"
        );
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 6 (structural identities): PASS - levels <= 8 exact ({} ms)",
        elapsed.as_millis()
    );
    assert!(elapsed <= Duration::from_secs(10));
}

#[test]
fn criterion_7_conjecture_replication() {
    let start = Instant::now();
    let mut profiles = square_grid(2, 3, 4);
    profiles.extend(square_grid(2, 3, 5));
    profiles.push(vec![3, 3, 3, 3]);
    let attempts = run_family(FamilyKind::Table2, &profiles);
    assert_attainment(
        "criterion 7 (conjecture replication, alpha 4..5, sizes [2,3])",
        &attempts,
        start.elapsed(),
        Duration::from_secs(900),
    );
}

#[test]
fn criterion_8_construction_oracle() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xca7);
    let words = common::words_up_to(2, 6);
    let pairs = 200;
    for round in 0..pairs {
        let a = common::random_dfa(&mut rng, 4, 2);
        let b = common::random_dfa(&mut rng, 4, 2);
        let piped = determinize(&catenate(&Nfa::from_dfa(&a), &Nfa::from_dfa(&b)).unwrap());
        for word in &words {
            let expected = (0..=word.len()).any(|cut| {
                a.accepts(&word[..cut]).unwrap() && b.accepts(&word[cut..]).unwrap()
            });
            assert_eq!(
                piped.accepts(word).unwrap(),
                expected,
                "pair {round}, word {word:?}"
            );
        }
    }
    println!(
        "criterion 8 (construction vs concatenation oracle): PASS - {pairs} random pairs, all words <= 6 agree ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_9_validity_decoding() {
    let start = Instant::now();
    let mut runs = 0usize;
    let mut states = 0usize;
    let mut check = |kind: FamilyKind, profiles: Vec<Vec<usize>>| {
        for attempt in run_family(kind, &profiles) {
            assert_eq!(
                attempt.valid_states,
                attempt.reachable_states,
                "{} at ({}): {} of {} reachable states decode invalid",
                kind.name(),
                sizes_str(&attempt.sizes),
                attempt.reachable_states - attempt.valid_states,
                attempt.reachable_states
            );
            runs += 1;
            states += attempt.reachable_states;
        }
    };
    check(FamilyKind::TwoLetter, square_grid(2, 5, 2));
    check(FamilyKind::ThreeLetter, square_grid(2, 4, 3));
    check(FamilyKind::Table1, square_grid(2, 4, 2));
    check(FamilyKind::Table1, square_grid(2, 4, 3));
    println!(
        "criterion 9 (validity decoding): PASS - 100% of {states} reachable states over {runs} runs decode valid ({} ms)",
        start.elapsed().as_millis()
    );
}
