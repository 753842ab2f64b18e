//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints a PASS/FAIL line; exits nonzero if any fails.

use std::collections::HashSet;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use freemat::certify::{check_free_pair, lower, named_pair, pingpong_witness, upper, Verdict};
use freemat::codec::{decode, encode, DecodeOutcome};
use freemat::explore::{
    collision_search, cw_path, cw_replay, cw_tree, product_levels, CollisionResult,
};
use freemat::{Mat2, Rational, Word};
use num_integer::Integer;
use num_traits::{One, Signed};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5eed_f4ee;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn fractional_pair() -> (Mat2, Mat2) {
    (
        Mat2::new(r(1, 2), r(1, 3), 1.into(), 1.into()),
        Mat2::new(1.into(), 1.into(), r(1, 2), r(1, 3)),
    )
}

/// Pairs used by the unique-factorization and oracle criteria.
fn criterion3_pairs() -> Vec<(&'static str, Mat2, Mat2)> {
    let (fa, fb) = fractional_pair();
    vec![
        ("calkin-wilf", lower(1), upper(1)),
        ("sanov", lower(2), upper(2)),
        ("fractional", fa, fb),
    ]
}

/// A rational in (0, 10^6].
fn random_positive(rng: &mut StdRng) -> Rational {
    let den = rng.gen_range(1..=1_000i64);
    let num = rng.gen_range(1..=1_000_000 * den);
    r(num, den)
}

fn random_nonneg(rng: &mut StdRng) -> Rational {
    r(rng.gen_range(0..=40), rng.gen_range(1..=9))
}

fn random_rational(rng: &mut StdRng) -> Rational {
    r(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000))
}

fn random_mat(rng: &mut StdRng, entry: fn(&mut StdRng) -> Rational) -> Mat2 {
    Mat2::new(entry(rng), entry(rng), entry(rng), entry(rng))
}

fn canonical(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

fn within(elapsed: Duration, limit: Duration) {
    assert!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
}

fn criterion1() {
    let start = Instant::now();
    assert!(check_free_pair(&lower(1), &upper(1)).is_certified());
    assert!(check_free_pair(&lower(2), &upper(2)).is_certified());
    for u in 1..=5 {
        for v in 1..=5 {
            let (a, b) = named_pair(&format!("lu-rv:{u}:{v}")).unwrap();
            assert!(check_free_pair(&a, &b).is_certified(), "L{u}, R{v}");
        }
    }
    assert_eq!(
        check_free_pair(&Mat2::identity(), &upper(1)).verdict,
        Verdict::NotCovered
    );
    let twice_l1 = lower(1).scale(&2.into());
    assert_eq!(twice_l1, Mat2::from_ints(2, 0, 2, 2));
    assert_eq!(
        check_free_pair(&lower(1), &twice_l1).verdict,
        Verdict::NotCovered
    );
    within(start.elapsed(), Duration::from_secs(1));
}

fn criterion2() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED ^ 2);
    let mut pairs: Vec<(Mat2, Mat2)> = vec![
        (lower(1), upper(1)),
        (lower(2), upper(2)),
        fractional_pair(),
    ];
    for (u, v) in [(1, 2), (2, 1), (3, 5), (5, 3), (4, 4)] {
        pairs.push((lower(u), upper(v)));
    }
    let mut drawn = 0;
    while pairs.len() < 25 {
        drawn += 1;
        assert!(drawn < 100_000, "random pairs never certify");
        let (p, q) = (
            random_mat(&mut rng, random_nonneg),
            random_mat(&mut rng, random_nonneg),
        );
        if check_free_pair(&p, &q).is_certified() {
            pairs.push((p, q));
        }
    }
    let one = Rational::one();
    for (p, q) in &pairs {
        let cert = check_free_pair(p, q);
        let pair = cert.certified_pair().expect("pair certifies");
        for _ in 0..10_000 {
            let t = random_positive(&mut rng);
            let t2 = random_positive(&mut rng);
            let at = pair.a().mobius_apply(&t).unwrap();
            let bt2 = pair.b().mobius_apply(&t2).unwrap();
            assert!(
                at.is_positive() && at < one && one < bt2,
                "t={t} t'={t2} A(t)={at} B(t')={bt2}"
            );
        }
        // The witness routine must agree.
        pingpong_witness(&cert, &[r(1, 1), r(1, 1_000_000), r(1_000_000, 1)]).unwrap();
    }
    within(start.elapsed(), Duration::from_secs(60));
}

fn criterion3() {
    let start = Instant::now();
    for (name, a, b) in criterion3_pairs() {
        let pair = check_free_pair(&a, &b).certified_pair().unwrap();
        let mut count = 0;
        for len in 1..=12usize {
            for index in 0..(1u64 << len) {
                let word = Word::from_index(index, len);
                let m = encode(&word, &pair);
                assert_eq!(
                    decode(&m, &pair, 64).unwrap(),
                    DecodeOutcome::Member(word),
                    "{name}"
                );
                count += 1;
            }
        }
        assert_eq!(count, 8190);
    }
    within(start.elapsed(), Duration::from_secs(30));
}

fn criterion4() {
    let start = Instant::now();
    for (name, a, b) in criterion3_pairs() {
        let report = collision_search(&a, &b, 10, 4).unwrap();
        assert_eq!(report.result, CollisionResult::None, "{name}");
        assert_eq!(report.words_enumerated, 2046);
    }
    within(start.elapsed(), Duration::from_secs(60));
    let report = collision_search(&lower(1), &Mat2::from_ints(2, 0, 2, 2), 2, 1).unwrap();
    assert_eq!(
        report.result,
        CollisionResult::Collision {
            first: "AB".parse().unwrap(),
            second: "BA".parse().unwrap(),
            product: Mat2::from_ints(2, 0, 4, 2),
        }
    );
}

fn criterion5() {
    let start = Instant::now();
    let tree = cw_tree(10);
    let values: Vec<Rational> = tree.iter().flatten().map(|n| n.value.clone()).collect();
    assert_eq!(values.len(), 2047);
    assert!(values.iter().all(Rational::is_positive));
    assert_eq!(values.iter().collect::<HashSet<_>>().len(), 2047);

    for p in 1..=50i64 {
        for q in 1..=50i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let value = r(p, q);
            assert_eq!(cw_replay(&cw_path(&value).unwrap()), value);
        }
    }

    let deep: HashSet<Rational> = cw_tree(12).into_iter().flatten().map(|n| n.value).collect();
    for p in 1..14i64 {
        for q in 1..=(14 - p) {
            if p.gcd(&q) == 1 {
                assert!(deep.contains(&r(p, q)), "{p}/{q} missing");
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(5));
}

fn criterion6() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED ^ 6);
    for _ in 0..10_000 {
        let (m, n) = (
            random_mat(&mut rng, random_rational),
            random_mat(&mut rng, random_rational),
        );
        assert_eq!((&m * &n).det(), m.det() * n.det());
    }
    for _ in 0..10_000 {
        let (m, n) = loop {
            let (m, n) = (
                random_mat(&mut rng, random_nonneg),
                random_mat(&mut rng, random_nonneg),
            );
            if m.is_invertible() && n.is_invertible() {
                break (m, n);
            }
        };
        let t = random_positive(&mut rng);
        let composed = (&m * &n).mobius_apply(&t).unwrap();
        assert_eq!(
            composed,
            m.mobius_apply(&n.mobius_apply(&t).unwrap()).unwrap()
        );
        assert!(composed.is_positive());
    }
    let mut inverted = 0;
    while inverted < 10_000 {
        let m = random_mat(&mut rng, random_rational);
        let Ok(inv) = m.inverse() else { continue };
        assert!((&m * &inv).is_identity() && (&inv * &m).is_identity());
        inverted += 1;
    }
    for _ in 0..10_000 {
        let (x, y) = (random_rational(&mut rng), random_rational(&mut rng));
        let mut results = vec![&x + &y, &x - &y, &x * &y, -&x];
        if !y.is_zero() {
            results.push(x.checked_div(&y).unwrap());
        }
        assert!(results.iter().chain([&x, &y]).all(canonical));
    }
    within(start.elapsed(), Duration::from_secs(60));
}

fn criterion7() {
    const FUEL: usize = 12;
    let start = Instant::now();
    let (l1, r1) = (lower(1), upper(1));
    let pair = check_free_pair(&l1, &r1).certified_pair().unwrap();
    let members: HashSet<Mat2> = product_levels(&l1, &r1, FUEL, 4)
        .into_iter()
        .flatten()
        .collect();
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    let mut rejected = 0;
    let mut draws = 0;
    while rejected < 1_000 {
        draws += 1;
        assert!(draws < 1_000_000);
        let m = Mat2::from_ints(
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
            rng.gen_range(0..=20),
        );
        if !m.is_invertible() {
            continue;
        }
        match decode(&m, &pair, FUEL).unwrap() {
            DecodeOutcome::NotMember(reason) => {
                assert!(
                    !members.contains(&m),
                    "{m} rejected ({reason}) but is a product"
                );
                rejected += 1;
            }
            DecodeOutcome::Member(w) => assert_eq!(encode(&w, &pair), m),
            DecodeOutcome::FuelExhausted { .. } => {}
        }
    }
    within(start.elapsed(), Duration::from_secs(600));
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 7] = [
        ("certificate correctness on named instances", criterion1),
        (
            "ping-pong separation 0 < A(t) < 1 < B(t') on 25 pairs x 10^4 draws",
            criterion2,
        ),
        (
            "unique factorization round trip, all words up to length 12",
            criterion3,
        ),
        ("collision oracle agrees with certificate", criterion4),
        (
            "Calkin-Wilf tree distinctness, path round trip, enumeration",
            criterion5,
        ),
        ("algebraic laws, 10^4 randomized checks each", criterion6),
        (
            "decode rejections confirmed by exhaustive enumeration",
            criterion7,
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check);
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({elapsed:.2?})", i + 1),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL criterion {}: {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
