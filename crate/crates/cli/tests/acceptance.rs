//! Acceptance suite: ten criteria, each with its own time limit. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use peano_forge::formula::{euclid_div, eval_nat, irred_formula, prim_formula, Env, Formula, Term};
use peano_forge::godel::{
    decode_formula, decode_seq, desugar, encode_formula, encode_seq, pair, remark_product,
    seq_at, seq_concat, seq_long, unpair,
};
use peano_forge::ramsey::{
    ceil_sqrt, check_subset_criterion, combine, decide, fast_growing, is_homogeneous, min_witness,
    product_color_bound, product_partition, raise_arity, FastGrowingBudget, Partition, RamseyError,
    Relation, SearchConfig, Subsets,
};
use peano_forge::recursive::{bezout_inverse, eval, eval_u64, stdlib, EvalOutcome, PRDef, PrError};
use peano_forge::BigNat;

use common::oracle;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn nat(x: u64) -> BigNat {
    BigNat::from(x)
}

fn sieve(limit: usize) -> Vec<bool> {
    let mut is = vec![true; limit + 1];
    is[0] = false;
    if limit >= 1 {
        is[1] = false;
    }
    for i in 2..=limit {
        if is[i] {
            for j in (i * i..=limit).step_by(i) {
                is[j] = false;
            }
        }
    }
    is
}

// 1 ------------------------------------------------------------------------

fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> Term {
    match rng.gen_range(0..if depth == 0 { 3 } else { 5 }) {
        0 => Term::Zero,
        1 => Term::One,
        2 => Term::Var(rng.gen_range(0..6)),
        3 => Term::add(random_term(rng, depth - 1), random_term(rng, depth - 1)),
        _ => Term::mul(random_term(rng, depth - 1), random_term(rng, depth - 1)),
    }
}

fn random_formula(rng: &mut ChaCha8Rng, depth: u32) -> Formula {
    let atom = |rng: &mut ChaCha8Rng| {
        let (s, t) = (random_term(rng, 2), random_term(rng, 2));
        if rng.gen_bool(0.5) {
            Formula::eq(s, t)
        } else {
            Formula::lt(s, t)
        }
    };
    if depth == 0 {
        return atom(rng);
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => atom(rng),
        1 => Formula::not(random_formula(rng, d)),
        2 => Formula::and(random_formula(rng, d), random_formula(rng, d)),
        3 => Formula::or(random_formula(rng, d), random_formula(rng, d)),
        4 => Formula::implies(random_formula(rng, d), random_formula(rng, d)),
        5 => Formula::forall(rng.gen_range(0..6), random_formula(rng, d)),
        _ => Formula::exists(rng.gen_range(0..6), random_formula(rng, d)),
    }
}

/// Symbol string of the coded form, written directly from the source formula.
fn expected_symbols(f: &Formula) -> String {
    fn term(t: &Term) -> String {
        match t {
            Term::Zero => "0".into(),
            Term::One => "1".into(),
            Term::Var(i) => format!("x{i}"),
            Term::Add(a, b) => format!("({}+{})", term(a), term(b)),
            Term::Mul(a, b) => format!("({}·{})", term(a), term(b)),
        }
    }
    match f {
        Formula::Eq(s, t) => format!("{}={}", term(s), term(t)),
        Formula::Lt(s, t) => {
            let used: BTreeSet<u32> = s.vars().into_iter().chain(t.vars()).collect();
            let k = (0..).find(|i| !used.contains(i)).unwrap();
            format!("¬∀x{k}¬({}+(x{k}+1))={}", term(s), term(t))
        }
        Formula::Not(a) => format!("¬{}", expected_symbols(a)),
        Formula::And(a, b) => format!("¬({}→¬{})", expected_symbols(a), expected_symbols(b)),
        Formula::Or(a, b) => format!("(¬{}→{})", expected_symbols(a), expected_symbols(b)),
        Formula::Implies(a, b) => format!("({}→{})", expected_symbols(a), expected_symbols(b)),
        Formula::ForAll(v, a) => format!("∀x{v}{}", expected_symbols(a)),
        Formula::Exists(v, a) => format!("¬∀x{v}¬{}", expected_symbols(a)),
    }
}

/// Reads a code back into symbols by trial division.
fn symbols_by_trial_division(code: &BigNat) -> String {
    let table = ["", "0", "1", "+", "·", "=", "(", ")", "→", "¬", "∀"];
    let mut rest = code.clone();
    let mut out = String::new();
    let mut p = 2u64;
    while rest != nat(1) {
        let mut e = 0usize;
        while &rest % p == nat(0) {
            rest /= p;
            e += 1;
        }
        out += &if e <= 10 { table[e].to_string() } else { format!("x{}", e - 11) };
        p = (p + 1..).find(|&q| (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)).unwrap();
    }
    out
}

fn c1_godel() -> Outcome {
    let zero_eq = Formula::eq(Term::Zero, Term::Zero);
    ensure!(encode_formula(&zero_eq) == nat(2430), "code of 0=0 is {}", encode_formula(&zero_eq));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut max_bits = 0;
    for i in 0..500 {
        let depth = rng.gen_range(0..=3);
        let f = random_formula(&mut rng, depth);
        ensure!(f.depth() <= 4, "generator exceeded depth 4");
        let code = encode_formula(&f);
        max_bits = max_bits.max(code.bits());
        let back = decode_formula(&code).map_err(|e| format!("formula {i}: {e}"))?;
        ensure!(back == desugar(&f), "formula {i}: decode(encode(f)) != desugar(f) for {f:?}");
        if i < 100 {
            let got = symbols_by_trial_division(&code);
            let want = expected_symbols(&f);
            ensure!(got == want, "formula {i}: symbols {got} instead of {want}");
        }
    }
    Ok(format!("500 formulas, largest code {max_bits} bits"))
}

// 2 ------------------------------------------------------------------------

fn c2_pairing() -> Outcome {
    ensure!(pair(&nat(0), &nat(0)) == nat(0), "<0,0>");
    ensure!(pair(&nat(1), &nat(2)) == nat(8), "<1,2>");
    for x in 0..=500u64 {
        for y in 0..=500u64 {
            let z = pair(&nat(x), &nat(y));
            let s = x + y;
            ensure!(z == nat(s * (s + 1) / 2 + y), "<{x},{y}> = {z}");
            ensure!(unpair(&z) == (nat(x), nat(y)), "unpair(<{x},{y}>)");
        }
    }
    for z in 0..=125_000u64 {
        let (x, y) = unpair(&nat(z));
        ensure!(pair(&x, &y) == nat(z), "pair(unpair({z}))");
    }
    Ok("251001 pairs and 125001 codes".into())
}

// 3 ------------------------------------------------------------------------

fn c3_sequences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let list = |rng: &mut ChaCha8Rng| -> Vec<u64> {
        let len = rng.gen_range(0..10);
        (0..len).map(|_| rng.gen_range(0..40)).collect()
    };
    let mut remarks = 0;
    let mut check_remark = |a: &peano_forge::godel::SeqCode| -> Result<(), String> {
        ensure!(&remark_product(a) == a.value(), "remark identity fails for {}", a.value());
        remarks += 1;
        Ok(())
    };
    for _ in 0..1000 {
        let xs = list(&mut rng);
        let a = encode_seq(&xs);
        ensure!(decode_seq(a.value()).unwrap() == xs, "round trip of {xs:?}");
        for (i, x) in xs.iter().enumerate() {
            ensure!(seq_at(a.value(), i) == Ok(*x), "(a)_{i} of {xs:?}");
        }
        ensure!(seq_long(a.value()) == xs.len().saturating_sub(1), "Long of {xs:?}");
        check_remark(&a)?;
    }
    for _ in 0..200 {
        let (xs, ys, zs) = (list(&mut rng), list(&mut rng), list(&mut rng));
        let (a, b, c) = (encode_seq(&xs), encode_seq(&ys), encode_seq(&zs));
        let left = seq_concat(&seq_concat(&a, &b), &c);
        let right = seq_concat(&a, &seq_concat(&b, &c));
        ensure!(left == right, "associativity on {xs:?} {ys:?} {zs:?}");
        let all: Vec<u64> = xs.iter().chain(&ys).chain(&zs).copied().collect();
        ensure!(left == encode_seq(&all), "concat is not list append");
        for code in [&a, &b, &c, &left] {
            check_remark(code)?;
        }
    }
    Ok(format!("1000 round trips, 200 triples, {remarks} remark checks"))
}

// 4 ------------------------------------------------------------------------

fn c4_ramsey() -> Outcome {
    let seq = SearchConfig::default().with_jobs(1);
    let par = SearchConfig::default().with_jobs(8);
    let six = decide(Relation::Ramsey, 6, 3, 2, 2, &seq).map_err(|e| e.to_string())?;
    ensure!(six.holds, "6 -> (3)^2_2 should hold");
    ensure!(oracle::holds(6, 3, 2, 2, false), "oracle disagrees at m = 6");
    let five = decide(Relation::Ramsey, 5, 3, 2, 2, &seq).map_err(|e| e.to_string())?;
    ensure!(!five.holds, "5 -> (3)^2_2 should fail");
    let counter = five.counterexample.clone().ok_or("no counterexample")?;
    let want = oracle::first_counterexample(5, 3, 2, 2, false).ok_or("oracle found none")?;
    ensure!(counter.colors() == &want[..], "counterexample differs from the oracle's first");
    ensure!(
        decide(Relation::Ramsey, 5, 3, 2, 2, &par).map_err(|e| e.to_string())? == five,
        "parallel search differs"
    );
    let min = min_witness(3, 2, 2, Relation::Ramsey, 10, &seq).map_err(|e| e.to_string())?;
    ensure!(min == Some(6), "min witness {min:?}");
    ensure!(oracle::min_witness(3, 2, 2, false, 10) == Some(6), "oracle min witness");
    for jobs in ["1", "8"] {
        let out = common::run(&["ramsey", "--m", "5", "--k", "3", "--r", "2", "--n", "2", "--jobs", jobs], &[]);
        ensure!(
            out.stdout == format!("false\n{}", common::PENTAGON),
            "CLI output at --jobs {jobs}: {:?}",
            out.stdout
        );
    }
    Ok("R(3,3) = 6, least counterexample on 5 points matches the oracle".into())
}

// 5 ------------------------------------------------------------------------

/// `(n, r, k)` to the least `m <= 7` with `m ->* (k)^n_r`, from the oracle.
const PH_MIN_GRID: [((usize, u32, usize), Option<usize>); 14] = [
    ((1, 1, 1), Some(1)),
    ((1, 1, 2), Some(2)),
    ((1, 1, 3), Some(3)),
    ((1, 1, 4), Some(4)),
    ((1, 2, 1), Some(1)),
    ((1, 2, 2), Some(3)),
    ((1, 2, 3), Some(5)),
    ((1, 2, 4), Some(7)),
    ((2, 1, 2), Some(2)),
    ((2, 1, 3), Some(3)),
    ((2, 1, 4), Some(4)),
    ((2, 2, 2), Some(2)),
    ((2, 2, 3), Some(6)),
    ((2, 2, 4), None),
];

/// `(n, r, k, max_m)` to the least Ramsey and PH witnesses, where they differ.
type Extra = ((usize, u32, usize, usize), Option<usize>, Option<usize>);

const PH_MIN_EXTRA: [Extra; 2] = [
    ((1, 3, 3, 10), Some(7), Some(8)),
    ((1, 4, 2, 9), Some(5), Some(6)),
];

fn c5_paris_harrington() -> Outcome {
    // goldens first, from the oracle alone
    for ((n, r, k), want) in PH_MIN_GRID {
        let got = oracle::min_witness(k, r, n, true, 7);
        ensure!(got == want, "oracle PH minimum for n={n} r={r} k={k}: {got:?}, golden {want:?}");
    }
    for ((n, r, k, max_m), ramsey, ph) in PH_MIN_EXTRA {
        ensure!(oracle::min_witness(k, r, n, false, max_m) == ramsey, "oracle Ramsey n={n} r={r} k={k}");
        ensure!(oracle::min_witness(k, r, n, true, max_m) == ph, "oracle PH n={n} r={r} k={k}");
    }
    let cfg = SearchConfig::default();
    let err = |e: RamseyError| e.to_string();
    let mut tuples = 0;
    for n in 1..=2 {
        for r in 1..=2u32 {
            for k in n..=4 {
                let mut prev: Option<(bool, bool)> = None;
                for m in k..=7 {
                    let ram = decide(Relation::Ramsey, m, k, r, n, &cfg).map_err(err)?;
                    let ph = decide(Relation::ParisHarrington, m, k, r, n, &cfg).map_err(err)?;
                    ensure!(!ph.holds || ram.holds, "PH without Ramsey at m={m} k={k} r={r} n={n}");
                    if let Some((pr, pp)) = prev {
                        ensure!(!pr || ram.holds, "Ramsey not monotone at m={m} k={k} r={r} n={n}");
                        ensure!(!pp || ph.holds, "PH not monotone at m={m} k={k} r={r} n={n}");
                    }
                    prev = Some((ram.holds, ph.holds));
                    for (out, is_ph) in [(&ram, false), (&ph, true)] {
                        let want = oracle::first_counterexample(m, k, r, n, is_ph);
                        let got = out.counterexample.as_ref().map(|p| p.colors().to_vec());
                        ensure!(got == want, "engine and oracle differ at m={m} k={k} r={r} n={n} ph={is_ph}");
                    }
                    tuples += 1;
                }
            }
        }
    }
    for ((n, r, k), want) in PH_MIN_GRID {
        let got = min_witness(k, r, n, Relation::ParisHarrington, 7, &cfg).map_err(err)?;
        ensure!(got == want, "engine PH minimum for n={n} r={r} k={k}: {got:?}");
    }
    for ((n, r, k, max_m), ramsey, ph) in PH_MIN_EXTRA {
        ensure!(min_witness(k, r, n, Relation::Ramsey, max_m, &cfg).map_err(err)? == ramsey, "engine Ramsey extra");
        ensure!(min_witness(k, r, n, Relation::ParisHarrington, max_m, &cfg).map_err(err)? == ph, "engine PH extra");
    }
    Ok(format!("{tuples} tuples agree with the oracle; PH(k=3,r=2,n=2) = 6"))
}

// 6 ------------------------------------------------------------------------

/// A random partition, often with a planted set on which it is constant, or
/// on which it only varies within one block of `s` consecutive colors.
fn planted(rng: &mut ChaCha8Rng, m: usize, n: usize, r: u32) -> Partition {
    let size = rng.gen_range(n..=m);
    let mut set: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        set.swap(i, rng.gen_range(0..=i));
    }
    let mut set = set[..size].to_vec();
    set.sort();
    let mode = rng.gen_range(0..3);
    let color = rng.gen_range(0..r);
    let s = ceil_sqrt(u64::from(r)) as u32;
    let block = rng.gen_range(0..r.div_ceil(s));
    Partition::from_fn(m, n, r, |sub| {
        let inside = sub.iter().all(|x| set.contains(x));
        match (inside, mode) {
            (true, 0) => color,
            (true, 1) => (block * s + rng.gen_range(0..s)).min(r - 1),
            _ => rng.gen_range(0..r),
        }
    })
    .unwrap()
}

fn random_set(rng: &mut ChaCha8Rng, m: usize, min_len: usize) -> Vec<usize> {
    loop {
        let h: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.6)).collect();
        if h.len() >= min_len {
            return h;
        }
    }
}

fn all_sets(m: usize, min_len: usize) -> impl Iterator<Item = Vec<usize>> {
    (min_len..=m).flat_map(move |k| Subsets::new(m, k))
}

fn c6_reductions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let homog = |p: &Partition, h: &[usize]| is_homogeneous(p, h).unwrap();
    let mut nontrivial = 0;
    for _ in 0..200 {
        let m = rng.gen_range(3..=8);
        let n = rng.gen_range(1..=3.min(m));
        let (r0, r1) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let p0 = planted(&mut rng, m, n, r0);
        let p1 = if rng.gen_bool(0.3) { Partition::constant(m, n, r1, r1 - 1).unwrap() } else { planted(&mut rng, m, n, r1) };
        let p = product_partition(&p0, &p1).map_err(|e| e.to_string())?;
        ensure!(p.r() == r0 * r1, "product has {} colors", p.r());
        let h = random_set(&mut rng, m, n);
        let both = homog(&p0, &h) && homog(&p1, &h);
        nontrivial += usize::from(both);
        ensure!(homog(&p, &h) == both, "product equivalence fails on {h:?}");
    }
    for _ in 0..200 {
        let m = rng.gen_range(3..=8);
        let n = rng.gen_range(1..=(m - 1).min(3));
        let r = rng.gen_range(1..=4);
        let p = planted(&mut rng, m, n, r);
        let h = random_set(&mut rng, m, n + 1);
        ensure!(
            check_subset_criterion(&p, &h).unwrap() == homog(&p, &h),
            "subset criterion differs on {h:?}"
        );
    }
    let mut raised = 0;
    for m in 4..=8 {
        for r in 1..=9u32 {
            let bound = 1 + 2 * ceil_sqrt(u64::from(r)) as usize;
            for trial in 0..6 {
                let p = if trial == 0 { Partition::constant(m, 2, r, r - 1).unwrap() } else { planted(&mut rng, m, 2, r) };
                let q = raise_arity(&p).map_err(|e| e.to_string())?;
                ensure!(q.n() == 3 && q.r() as usize == bound, "raised shape [{}]^{} with {} colors", q.m(), q.n(), q.r());
                ensure!(q.used_colors() <= bound, "{} colors used, bound {bound}", q.used_colors());
                for h in all_sets(m, 4) {
                    ensure!(homog(&q, &h) == homog(&p, &h), "raise equivalence fails: m={m} r={r} H={h:?}");
                }
                raised += 1;
            }
        }
    }
    let mut log = Vec::new();
    for (arities, colors) in [([1usize, 2usize], [2u32, 3u32]), ([1, 3], [3, 2]), ([2, 3], [4, 2])] {
        let ps: Vec<Partition> = arities
            .iter()
            .zip(colors)
            .map(|(&e, r)| planted(&mut rng, 7, e, r))
            .collect();
        let c = combine(&ps).map_err(|e| e.to_string())?;
        let e = *arities.iter().max().unwrap();
        ensure!(c.n() == e, "combined arity {}", c.n());
        for h in all_sets(7, e + 1) {
            let all = ps.iter().all(|p| homog(p, &h));
            ensure!(homog(&c, &h) == all, "combine equivalence fails on {h:?}");
        }
        log.push(format!("arities {arities:?}: {} colors vs product bound {}", c.r(), product_color_bound(&ps)));
    }
    Ok(format!(
        "{nontrivial} jointly homogeneous products; {raised} raised partitions; {}",
        log.join("; ")
    ))
}

// 7 ------------------------------------------------------------------------

fn value(d: &PRDef, args: &[u64]) -> Result<u64, String> {
    match eval_u64(d, args, u64::MAX) {
        Ok(EvalOutcome::Value(v)) => u64::try_from(&v).map_err(|_| "value too large".into()),
        other => Err(format!("{d} at {args:?}: {other:?}")),
    }
}

fn random_def(rng: &mut ChaCha8Rng, arity: usize, depth: u32) -> PRDef {
    let leaf = |rng: &mut ChaCha8Rng| {
        let i = rng.gen_range(1..=arity);
        match rng.gen_range(0..3) {
            0 => PRDef::proj(i, arity),
            1 => PRDef::comp(PRDef::Succ, vec![PRDef::proj(i, arity)]),
            _ => PRDef::comp(PRDef::ZeroFn, vec![PRDef::proj(i, arity)]),
        }
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..4) {
        0 => leaf(rng),
        1 => {
            let k = rng.gen_range(1..=2);
            let f = random_def(rng, k, depth - 1);
            let gs = (0..k).map(|_| random_def(rng, arity, depth - 1)).collect();
            PRDef::comp(f, gs)
        }
        2 if arity >= 2 => PRDef::primrec(random_def(rng, arity - 1, depth - 1), random_def(rng, arity + 1, depth - 1)),
        _ => PRDef::bounded_mu(random_def(rng, arity, depth - 1)),
    }
}

fn c7_recursive() -> Outcome {
    let names = ["add", "mul", "max", "min", "sub_trunc"];
    let direct: [fn(u64, u64) -> u64; 5] = [
        |a: u64, b: u64| a + b,
        |a: u64, b: u64| a * b,
        |a: u64, b: u64| a.max(b),
        |a: u64, b: u64| a.min(b),
        |a: u64, b: u64| a.saturating_sub(b),
    ];
    for (name, f) in names.iter().zip(direct) {
        let d = stdlib(name).map_err(|e| e.to_string())?;
        for a in 0..=50 {
            for b in 0..=50 {
                ensure!(value(&d, &[a, b])? == f(a, b), "{name}({a}, {b})");
            }
        }
    }
    let fact = stdlib("factorial").unwrap();
    for x in 0..=10u64 {
        ensure!(value(&fact, &[x])? == (1..=x).product::<u64>(), "factorial({x})");
    }
    let primes = sieve(200);
    let is_prime = stdlib("is_prime").unwrap();
    for x in 0..=100u64 {
        ensure!((value(&is_prime, &[x])? == 1) == primes[x as usize], "is_prime({x})");
    }
    let listed: Vec<u64> = (0..200).filter(|&i| primes[i]).map(|i| i as u64).collect();
    let nth = stdlib("nth_prime").unwrap();
    for (i, &p) in listed.iter().enumerate().take(21) {
        ensure!(value(&nth, &[i as u64])? == p, "nth_prime({i})");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ladder: Vec<u64> = (0..=22).map(|j| 1u64 << j).collect();
    let mut reached = 0;
    for t in 0..100 {
        let arity = rng.gen_range(1..=3);
        let d = random_def(&mut rng, arity, 3);
        ensure!(d.is_mu_free() && d.arity() == Ok(arity), "generator produced {d}");
        let args: Vec<BigNat> = (0..arity).map(|_| nat(rng.gen_range(0..6))).collect();
        let mut first: Option<(u64, BigNat)> = None;
        for &fuel in &ladder {
            match eval(&d, &args, fuel).map_err(|e| e.to_string())? {
                EvalOutcome::Value(v) => match &first {
                    None => first = Some((fuel, v)),
                    Some((_, w)) => ensure!(&v == w, "tree {t}: value changed with more fuel"),
                },
                EvalOutcome::BudgetExhausted => {
                    ensure!(first.is_none(), "tree {t}: value lost with more fuel")
                }
                EvalOutcome::Undefined => return Err(format!("tree {t}: Undefined from the evaluator")),
            }
        }
        if let Some((fuel, v)) = first {
            reached += 1;
            // the exact threshold, and stability just above it
            let (mut lo, mut hi) = (fuel / 2, fuel);
            while hi - lo > 1 {
                let mid = (lo + hi) / 2;
                match eval(&d, &args, mid).unwrap() {
                    EvalOutcome::Value(_) => hi = mid,
                    _ => lo = mid,
                }
            }
            ensure!(eval(&d, &args, lo).unwrap() == EvalOutcome::BudgetExhausted || lo == 0, "tree {t}: threshold");
            for extra in 0..4 {
                ensure!(eval(&d, &args, hi + extra).unwrap() == EvalOutcome::Value(v.clone()), "tree {t}: not monotone");
            }
        }
    }
    ensure!(reached >= 90, "only {reached} of 100 random trees finished within 2^22 steps");

    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut coprime = 0;
    for x in 1..=200u64 {
        for y in 1..=200u64 {
            match bezout_inverse(&nat(x), &nat(y)) {
                Ok(z) => {
                    let z = u64::try_from(&z).unwrap();
                    ensure!(gcd(x, y) == 1, "inverse claimed for {x}, {y}");
                    ensure!(z < y && (x * z) % y == 1 % y, "bad inverse {z} of {x} mod {y}");
                    coprime += 1;
                }
                Err(PrError::NotCoprime { .. }) => ensure!(gcd(x, y) != 1, "{x}, {y} are coprime"),
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!("stdlib tables agree; {reached}/100 random trees fuel-monotone; {coprime} coprime pairs"))
}

// 8 ------------------------------------------------------------------------

fn c8_number_theory() -> Outcome {
    let primes = sieve(1000);
    let prim = prim_formula(0);
    let irred = irred_formula(0);
    for x in 0..=1000u64 {
        let env = Env::from([(0, nat(x))]);
        let p = eval_nat(&prim, &env, 0).map_err(|e| e.to_string())?;
        ensure!(p == primes[x as usize], "Prim({x}) = {p}");
        if x >= 2 {
            let q = eval_nat(&irred, &env, 0).map_err(|e| e.to_string())?;
            ensure!(p == q, "Prim and Irred differ at {x}");
        }
    }
    for a in 1..=100u64 {
        for b in 0..=1000u64 {
            let (s, r) = euclid_div(&nat(b), &nat(a)).map_err(|e| e.to_string())?;
            let (s, r) = (u64::try_from(&s).unwrap(), u64::try_from(&r).unwrap());
            ensure!(b == a * s + r && r < a, "{b} = {a}*{s} + {r}");
            let others = (0..a).filter(|&r2| r2 != r && (b >= r2) && (b - r2) % a == 0).count();
            ensure!(others == 0, "division of {b} by {a} is not unique");
        }
        ensure!(euclid_div(&nat(5), &nat(0)).is_err(), "division by zero accepted");
    }
    Ok("Prim = sieve on 0..=1000, Prim = Irred on 2..=1000, 100100 divisions".into())
}

// 9 ------------------------------------------------------------------------

fn c9_fast_growing() -> Outcome {
    let f = |n: u32, x: u64| fast_growing(n, &nat(x), FastGrowingBudget::default()).map_err(|e| e.to_string());
    ensure!(f(0, 5)? == nat(7), "f0(5)");
    ensure!(f(1, 3)? == nat(8), "f1(3)");
    for x in 0..=100 {
        ensure!(f(1, x)? == nat(2 * x + 2), "f1({x})");
    }
    for x in 0..=14u64 {
        ensure!(f(2, x)? >= nat(1 << x), "f2({x}) < 2^{x}");
    }
    ensure!(f(3, 2)? == nat(65534), "f3(2)");
    let budget = FastGrowingBudget {
        max_result_bits: 1 << 20,
        max_iterations: 1_000_000,
    };
    match fast_growing(3, &nat(5), budget) {
        Err(RamseyError::BudgetExceeded { iterations, .. }) => {
            Ok(format!("f3(5) stopped after {iterations} iterations"))
        }
        other => Err(format!("f3(5) under 10^6 iterations: {other:?}")),
    }
}

// 10 -----------------------------------------------------------------------

fn c10_cli() -> Outcome {
    let documented = common::documented_examples();
    let contract = common::contract_cases();
    let failures: Vec<String> = documented
        .iter()
        .chain(&contract)
        .filter_map(|c| common::check(c).err())
        .collect();
    ensure!(failures.is_empty(), "{}", failures.join("\n"));
    Ok(format!("{} documented examples, {} contract cases", documented.len(), contract.len()))
}

fn main() {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("Gödel round trip", 60, c1_godel),
        ("pairing bijection", 10, c2_pairing),
        ("sequence laws", 30, c3_sequences),
        ("Ramsey exactness", 120, c4_ramsey),
        ("Paris-Harrington properties", 600, c5_paris_harrington),
        ("partition reductions", 600, c6_reductions),
        ("recursive-function calculus", 60, c7_recursive),
        ("number-theory formulas", 60, c8_number_theory),
        ("fast-growing hierarchy", 10, c9_fast_growing),
        ("CLI golden tests", 30, c10_cli),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let id = (i + 1).to_string();
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let took = start.elapsed();
        let result = match result {
            Ok(_) if took > Duration::from_secs(*limit) => Err(format!("took longer than {limit} s")),
            r => r,
        };
        match result {
            Ok(detail) => println!("[PASS] {id:>2} {name} ({:.2} s of {limit} s): {detail}", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id:>2} {name} ({:.2} s of {limit} s): {why}", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
