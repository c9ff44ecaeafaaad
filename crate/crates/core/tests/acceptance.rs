//! Acceptance suite. Each criterion runs in isolation, prints one line and
//! the process fails if any of them fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use friezes::continuants::{
    check_euler_identity, check_left_recurrence, check_lewis_carroll, check_reversal, check_trailing_zero,
    check_unimodularity_identity, IntMatrix,
};
use friezes::frieze::{check_glide_symmetry, check_periodicity, check_unimodularity, extended_entry, minimal_period};
use friezes::modular::{check_ovsienko_sign, dissection_quiddity};
use friezes::triangulation::admissible_paths_count;
use friezes::*;

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn q(s: &str) -> ExtRational {
    s.parse().unwrap()
}

/// Fastest of `runs` timings, to keep scheduler noise out of the small budgets.
fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> Duration {
    (0..runs)
        .map(|_| {
            let t = Instant::now();
            std::hint::black_box(f());
            t.elapsed()
        })
        .min()
        .unwrap()
}

fn criterion_1() -> String {
    let row = ints(&[2, 1, 4, 2, 1, 3, 2]);
    let build = || build_frieze(&row.iter().cloned().map(BigRational::from_integer).collect::<Vec<_>>(), 32).unwrap();
    let f = build().closed().expect("closes");
    let third: Vec<BigRational> = ints(&[1, 3, 7, 1, 2, 5, 3]).into_iter().map(BigRational::from_integer).collect();
    assert_eq!(f.row(3), third.as_slice());
    assert_eq!(f.order(), 7);
    let text = f.to_text();
    assert_eq!(text.lines().count(), 6, "{text}");
    assert!(text.lines().all(|l| !l.trim().is_empty()));
    let ones = text.lines().next().unwrap().split_whitespace().all(|x| x == "1");
    assert!(ones && text.lines().last().unwrap().split_whitespace().all(|x| x == "1"));
    assert!(check_glide_symmetry(&f));
    assert!(check_periodicity(&f));
    assert!(check_unimodularity(&f));
    assert_eq!(minimal_period(&f), 7);
    let t = best_of(20, build);
    assert!(t < Duration::from_millis(1), "took {t:?}");
    format!("{t:?}")
}

fn criterion_2() -> String {
    let run = || {
        let x = q("7/5");
        let pos = expand_positive(&x).unwrap();
        let neg = expand_negative(&x).unwrap();
        let mp = matrix_positive(pos.coeffs());
        let m = matrix_negative(neg.coeffs());
        (pos, neg, mp, m)
    };
    let (pos, neg, mp, m) = run();
    assert_eq!(pos.coeffs(), ints(&[1, 2, 1, 1]).as_slice());
    assert_eq!(neg.coeffs(), ints(&[2, 2, 3]).as_slice());
    assert_eq!(mp, Mat2::new(7, 4, 5, 3));
    assert_eq!(m, Mat2::new(7, -3, 5, -2));
    assert_eq!(mp, m.clone() * Mat2::r());
    let t = best_of(20, run);
    assert!(t < Duration::from_millis(1), "took {t:?}");
    format!("{t:?}")
}

fn criterion_3() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let start = Instant::now();
    let mut done = 0;
    while done < 10_000 {
        let (a, b) = (rng.gen_range(1..=1_000_000i64), rng.gen_range(1..=1_000_000i64));
        if a == b || a.gcd(&b) != 1 {
            continue;
        }
        let x = ExtRational::new(a.max(b), a.min(b)).unwrap();
        let neg = expand_negative(&x).unwrap();
        let pos = expand_positive(&x).unwrap();
        assert_eq!(positive_to_negative(&pos), neg, "{x}");
        let bamboo = bamboo_triangulation(&pos).unwrap();
        let quid = quiddity_of(&bamboo.triangulation);
        let k = bamboo.k;
        assert_eq!(&quid.entries()[..k], neg.coeffs(), "{x}");
        assert!(quid.entries()[k].is_one() && quid.entries()[quid.len() - 1].is_one());
        assert_eq!(bamboo.labels[k], x);
        done += 1;
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(30), "took {t:?}");
    format!("10000 fractions, {t:?}")
}

fn criterion_4() -> String {
    let start = Instant::now();
    let catalan = [1u64, 2, 5, 14, 42, 132, 429, 1430];
    for (n, &expected) in (3..=10).zip(&catalan) {
        let all = enumerate_triangulations(n);
        assert_eq!(all.len() as u64, expected);
        assert_eq!(catalan_count(n), BigInt::from(expected));
        for t in all {
            let quid = quiddity_of(&t);
            let f = frieze_from_quiddity(&quid).unwrap();
            assert_eq!(f.order(), n);
            assert!(f.is_integral());
            assert_eq!(quiddity_of(&triangulation_from_quiddity(&quid).unwrap()), quid);
            assert_eq!(triangulation_from_quiddity(&quid).unwrap(), t);
        }
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(60), "took {t:?}");
    format!("{t:?}")
}

fn three_way(a: &[BigInt]) {
    let rec = continuant(a);
    assert_eq!(continuant_bruteforce(a).unwrap(), rec, "{a:?}");
    assert_eq!(continuant_determinant(a), rec, "{a:?}");
}

fn criterion_5() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100_000 {
        let len = rng.gen_range(0..=10);
        let a: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(-3..=5))).collect();
        three_way(&a);
    }
    let mut exhaustive = 0;
    for len in 0..=6u32 {
        for code in 0..4u32.pow(len) {
            let a: Vec<BigInt> = (0..len).map(|i| BigInt::from((code / 4u32.pow(i)) % 4)).collect();
            three_way(&a);
            exhaustive += 1;
        }
    }
    format!("100000 sampled, {exhaustive} exhaustive")
}

fn criterion_6() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let seq = |rng: &mut ChaCha8Rng, min: usize| -> Vec<BigInt> {
        let len = rng.gen_range(min..=12);
        (0..len).map(|_| BigInt::from(rng.gen_range(-6..=6))).collect()
    };
    for _ in 0..10_000 {
        assert!(check_unimodularity_identity(&seq(&mut rng, 1)));
        assert!(check_reversal(&seq(&mut rng, 0)));
        assert!(check_trailing_zero(&seq(&mut rng, 1)));
        assert!(check_left_recurrence(&seq(&mut rng, 1)));
        let a = seq(&mut rng, 2);
        let m = rng.gen_range(0..a.len());
        let n = rng.gen_range(1..=a.len() - m);
        let l = rng.gen_range(0..n);
        assert!(check_euler_identity(&a, m, l, n).unwrap(), "{a:?} m={m} l={l} n={n}");
        let order = rng.gen_range(2..=6);
        let rows: Vec<Vec<BigInt>> = (0..order)
            .map(|_| (0..order).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect())
            .collect();
        let mat = IntMatrix::from_rows(rows).unwrap();
        assert!(check_lewis_carroll(&mat).unwrap());
        assert_eq!(mat.determinant(), mat.cofactor_determinant());
    }
    "6 identities x 10000".into()
}

fn criterion_7() -> String {
    let heptagon = Triangulation::from_diagonals(7, &[(1, 4), (1, 5), (1, 6), (2, 4)]).unwrap();
    assert_eq!(quiddity_of(&heptagon).entries(), ints(&[4, 2, 1, 3, 2, 2, 1]).as_slice());
    assert_eq!(admissible_paths_count(&heptagon, 7, 3).unwrap(), BigInt::from(7));
    let mut windows = 0;
    for n in 3..=8 {
        for t in enumerate_triangulations(n) {
            let quid = quiddity_of(&t);
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    let between = (j + n - i - 1) % n;
                    let by_continuant = continuant(&quid.window(i as i64 + 1, between));
                    let by_entry = frieze_entry(&quid, i as i64 + 1, (i + between) as i64).unwrap();
                    let paths = admissible_paths_count(&t, i, j).unwrap();
                    assert_eq!(paths, by_continuant, "{quid} {i}->{j}");
                    assert_eq!(paths, by_entry);
                    windows += 1;
                }
            }
        }
    }
    format!("{windows} windows")
}

fn criterion_8() -> String {
    let show = |k| {
        stern_brocot_sequence(k)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    assert_eq!(show(0), "0/1 1/1 1/0");
    assert_eq!(show(1), "0/1 1/2 1/1 2/1 1/0");
    assert_eq!(show(2), "0/1 1/3 1/2 2/3 1/1 3/2 2/1 3/1 1/0");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut done = 0;
    while done < 10_000 {
        let p: i64 = rng.gen_range(1..2000);
        let qq: i64 = rng.gen_range(1..=2000 - p);
        if p.gcd(&qq) != 1 {
            continue;
        }
        let x = ExtRational::new(p, qq).unwrap();
        let loc = stern_brocot_locate(&x).unwrap();
        assert!(loc.depth as i64 <= p + qq);
        assert!(loc.left.is_farey_neighbor(&loc.right));
        assert!(loc.left.is_farey_neighbor(&x) && x.is_farey_neighbor(&loc.right));
        assert!(loc.left < x && x < loc.right);
        // replay with raw mediants, no reduction
        let (mut l, mut r) = ((0i64, 1i64), (1i64, 0i64));
        let mut steps = 0;
        loop {
            let m = (l.0 + r.0, l.1 + r.1);
            assert_eq!(m.0.gcd(&m.1), 1);
            if m == (p, qq) {
                break;
            }
            if p * m.1 > m.0 * qq {
                l = m;
            } else {
                r = m;
            }
            steps += 1;
        }
        assert_eq!(steps, loc.depth);
        assert_eq!((q(&format!("{}/{}", l.0, l.1)), q(&format!("{}/{}", r.0, r.1))), (loc.left, loc.right));
        done += 1;
    }
    "3 sequences, 10000 fractions".into()
}

/// Cells, and the number of even-sided ones counted by hand.
fn dissection_fixtures() -> Vec<(usize, Vec<Vec<usize>>, usize)> {
    let range = |a: usize, b: usize| (a..=b).collect::<Vec<_>>();
    vec![
        (3, vec![vec![1, 2, 3]], 0),
        (4, vec![vec![1, 2, 3], vec![1, 3, 4]], 0),
        (6, vec![range(1, 6)], 1),
        (7, vec![range(1, 6), vec![6, 7, 1]], 1),
        (8, vec![range(1, 6), vec![1, 6, 8], vec![6, 7, 8]], 1),
        (9, vec![range(1, 9)], 0),
        (9, vec![vec![1, 3, 4, 6, 7, 9], vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]], 1),
        (10, vec![range(1, 6), [vec![1], range(6, 10)].concat()], 2),
        (12, vec![range(1, 12)], 1),
        (13, vec![range(1, 9), [vec![1], range(9, 13)].concat()], 1),
        (
            14,
            vec![range(1, 6), [vec![1], range(6, 10)].concat(), [vec![1], range(10, 14)].concat()],
            3,
        ),
        (
            17,
            vec![range(1, 9), [vec![1], range(9, 13)].concat(), [vec![1], range(13, 17)].concat()],
            2,
        ),
        (10, vec![vec![1, 2, 3], [range(3, 10), vec![1]].concat()], 0),
    ]
}

fn criterion_9() -> String {
    let mut count = 0;
    for n in 3..=10 {
        for t in enumerate_triangulations(n) {
            assert!(matrix_negative(quiddity_of(&t).entries()).is_minus_identity());
            count += 1;
        }
    }
    let fixtures = dissection_fixtures();
    for (n, cells, even) in &fixtures {
        let d = Dissection3d::new(*n, cells.clone()).unwrap();
        assert_eq!(d.even_cell_count(), *even);
        let want = if even % 2 == 0 { Verdict::MinusI } else { Verdict::PlusI };
        assert_eq!(verify_quiddity_identity(&dissection_quiddity(&d)), want, "n = {n}");
        assert!(check_ovsienko_sign(&d));
    }
    assert!(fixtures.len() >= 10);
    format!("{count} quiddities, {} dissections", fixtures.len())
}

fn criterion_10() -> String {
    let mut checked = 0;
    for n in 3..=9usize {
        for t in enumerate_triangulations(n) {
            let quid = quiddity_of(&t);
            let ni = n as i64;
            // the continuant of an arbitrarily long window is the extended entry
            let direct = |i: i64, j: i64| {
                if j - i + 1 == -1 {
                    BigInt::zero()
                } else {
                    continuant(&quid.window(i, (j - i + 1) as usize))
                }
            };
            for k in 0..=ni {
                let down = extended_entry(&quid, 1, ni + k).unwrap();
                assert_eq!(down, -extended_entry(&quid, 1, k).unwrap());
                assert_eq!(down, direct(1, ni + k));
            }
            for i in 1..=ni {
                for k in (i - 2)..(i - 2 + ni) {
                    let base = direct(i, k);
                    for r in 0..=3 {
                        let sign = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                        let e = extended_entry(&quid, i, r * ni + k).unwrap();
                        assert_eq!(e, &sign * &base, "{quid} i={i} k={k} r={r}");
                        assert_eq!(e, direct(i, r * ni + k));
                        checked += 1;
                    }
                }
            }
        }
    }
    format!("{checked} entries")
}

const INVOCATIONS: &[&[&str]] = &[
    &["frieze", "2,1,4,2,1,3,2"],
    &["frieze", "2,1,4,2,1,3,2", "--json"],
    &["frieze", "2,2"],
    &["cf", "7/5", "--positive"],
    &["cf", "7/5", "--matrix", "--negative"],
    &["cf", "7/5", "--convergents", "--negative"],
    &["stern", "7/5"],
    &["stern", "--sequence", "4"],
    &["verify", "1,1,1"],
    &["triangulation", "--cf", "[1,2,1,1]", "--dot"],
    &["render", "bamboo", "--cf", "[1,2,1,1]"],
    &["render", "bamboo", "--cf", "[1,2,1,1]", "--model", "disk"],
    &["render", "farey", "--depth", "5"],
];

fn criterion_11() -> String {
    for args in INVOCATIONS {
        let call = || friezes::cli::run(std::iter::once("friezes").chain(args.iter().copied()));
        assert_eq!(call(), call(), "{args:?}");
    }
    let exe = env!("CARGO_BIN_EXE_friezes");
    for args in INVOCATIONS {
        let call = || Command::new(exe).args(*args).output().unwrap();
        let (a, b) = (call(), call());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr);
        assert_eq!(a.status.code(), b.status.code());
        let lib = friezes::cli::run(std::iter::once("friezes").chain(args.iter().copied()));
        assert_eq!(String::from_utf8(a.stdout).unwrap(), lib.stdout);
        assert_eq!(a.status.code(), Some(lib.code));
    }
    let svg = friezes::cli::run(["friezes", "render", "bamboo", "--cf", "[1,2,1,1]"]).stdout;
    assert!(svg.contains(">7/5</text>") && !svg.contains("NaN"));
    format!("{} invocations", INVOCATIONS.len())
}

type Criterion = (&'static str, fn() -> String);

fn main() {
    let criteria: [Criterion; 11] = [
        ("frieze fixture", criterion_1),
        ("continued fraction fixture", criterion_2),
        ("negative expansion two ways", criterion_3),
        ("triangulations and friezes", criterion_4),
        ("continuant oracles", criterion_5),
        ("continuant identities", criterion_6),
        ("admissible paths", criterion_7),
        ("Stern-Brocot", criterion_8),
        ("quiddity identities", criterion_9),
        ("downward extension", criterion_10),
        ("determinism", criterion_11),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {:?})", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} {name}: FAIL {}", i + 1, msg.lines().next().unwrap_or(""));
            }
        }
    }
    let _ = std::panic::take_hook();
    if failed > 0 {
        eprintln!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
