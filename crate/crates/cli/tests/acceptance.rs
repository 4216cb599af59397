//! Exit criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use eisenstein::oracle::{param_triples, tree_triples};
use eisenstein::tree::{matrix_set, M1, M2, M3, M4, M5, N1, N2, N3, N4, N5};
use eisenstein::{
    apply_matrix, brute_force, classify, conjugate, from_sub, gcd3, is_member, is_primitive,
    to_sub, Family, GenMatrix, Triple, S, S_INV,
};

const BOUND: i64 = 10_000;
/// Canonical primitive triples with a <= 10^4, frozen from an independent sweep.
const C60: usize = 2769;
const C120: usize = 1384;

fn t(a: i64, b: i64, c: i64) -> Triple {
    Triple::new(a, b, c).unwrap()
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_eisenstein"))
        .args(args)
        .output()
        .expect("run eisenstein binary");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<(), String> + 'a>);

struct Oracles {
    sixty: Vec<Triple>,
    sub: Vec<Triple>,
    elapsed: Duration,
}

fn seed_identities() -> Result<(), String> {
    let start = Instant::now();
    let sixty = [t(7, 8, 5), t(13, 15, 7)];
    let sub = [t(7, 5, 3), t(13, 7, 8)];
    for s in sixty {
        ensure(classify(s) == Ok(Some(Family::Sixty)), || format!("{s} not primitive 60"))?;
    }
    for s in sub {
        ensure(classify(s) == Ok(Some(Family::OneTwenty)), || format!("{s} not primitive 120"))?;
    }
    ensure(is_member(Family::Sixty, t(13, 15, 17)) == Ok(false), || "(13,15,17) accepted".into())?;
    within(start.elapsed(), Duration::from_millis(1))?;

    for (args, fam) in [
        (["check", "7", "8", "5"], "60"),
        (["check", "13", "15", "7"], "60"),
        (["check", "7", "5", "3"], "120"),
        (["check", "13", "7", "8"], "120"),
    ] {
        let (code, out) = cli(&args);
        let expected = format!("{{\"family\":{fam},\"primitive\":true,");
        ensure(code == 0 && out.starts_with(&expected), || format!("{args:?} -> {code} {out}"))?;
    }
    let (code, out) = cli(&["check", "13", "15", "17"]);
    ensure(code == 1 && out == "{\"family\":null}\n", || format!("13 15 17 -> {code} {out}"))
}

fn bijection(o: &Oracles) -> Result<(), String> {
    let start = Instant::now();
    let mut image = BTreeSet::new();
    for &x in o.sixty.iter().filter(|x| !x.is_equilateral()) {
        let y = to_sub(x).map_err(|e| format!("to_sub{x}: {e}"))?;
        ensure(from_sub(y) == Ok(x), || format!("from_sub(to_sub{x}) != {x}"))?;
        image.insert(y.canonical());
    }
    let sub: BTreeSet<_> = o.sub.iter().copied().collect();
    ensure(image == sub, || format!("image {} vs oracle {}", image.len(), sub.len()))?;
    within(start.elapsed() + o.elapsed, Duration::from_secs(10))
}

fn tree_certification() -> Result<(), String> {
    let start = Instant::now();
    let (code, out) = cli(&["verify", "--family", "both", "--max-a", "10000"]);
    let elapsed = start.elapsed();
    ensure(code == 0 && out.ends_with("PASS\n"), || format!("verify exit {code}: {out}"))?;
    for line in out.lines().filter(|l| l.starts_with('{')) {
        let r: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let tree = &r["tree"];
        for key in ["duplicates", "missing", "extra"] {
            ensure(tree[key].as_array().is_some_and(|v| v.is_empty()), || format!("tree.{key}: {line}"))?;
        }
    }
    within(elapsed, Duration::from_secs(15))
}

fn parametrization(o: &Oracles) -> Result<(), String> {
    let start = Instant::now();
    // 60: ordered b > c triples per variant; 120: canonical forms
    let sixty = param_triples(Family::Sixty, BOUND).map_err(|e| e.to_string())?;
    let mut ordered = sixty.clone();
    ordered.sort_unstable();
    ensure(sixty.iter().all(|x| x.b() > x.c() || x.is_equilateral()), || "60 output not b > c".into())?;
    ensure(ordered == o.sixty, || format!("60: {} outputs vs {} oracle", ordered.len(), o.sixty.len()))?;
    let mut canon: Vec<_> = param_triples(Family::OneTwenty, BOUND)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|x| x.canonical())
        .collect();
    canon.sort_unstable();
    ensure(canon == o.sub, || format!("120: {} outputs vs {} oracle", canon.len(), o.sub.len()))?;
    within(start.elapsed(), Duration::from_secs(2))
}

fn conjugation() -> Result<(), String> {
    let ms = [M1, M2, M3, M4, M5];
    let ns = [N1, N2, N3, N4, N5];
    for (i, (m, n)) in ms.iter().zip(&ns).enumerate() {
        let c = conjugate(m).map_err(|e| e.to_string())?;
        ensure(c == *n, || format!("S M{} S^-1 = {c}, N{} = {n}", i + 1, i + 1))?;
    }
    let all: Vec<GenMatrix> = ms.iter().chain(&ns).copied().chain([S, S_INV]).collect();
    ensure(all.len() == 12, || "matrix count".into())?;
    for g in all {
        ensure(g.det().map(i64::abs) == Ok(1), || format!("|det {g}| != 1"))?;
    }
    Ok(())
}

fn structural_invariants() -> Result<(), String> {
    let start = Instant::now();
    let mut edges = 0usize;
    for family in Family::ALL {
        let set = matrix_set(family);
        let mut level = set.seeds.to_vec();
        for _depth in 0..4 {
            let mut next = Vec::with_capacity(level.len() * 5);
            for &p in &level {
                for g in &set.generators {
                    let ch = apply_matrix(g, p).map_err(|e| format!("{p}: {e}"))?;
                    edges += 1;
                    ensure(is_primitive(family, ch) == Ok(true), || format!("{family}: {p} -> {ch} not primitive"))?;
                    ensure(gcd3(ch.a(), ch.b(), ch.c()) == gcd3(p.a(), p.b(), p.c()), || format!("gcd {p} -> {ch}"))?;
                    ensure(ch.a() > p.a(), || format!("no growth {p} -> {ch}"))?;
                    let ordered = match family {
                        Family::Sixty => ch.b() > ch.a() && ch.a() > ch.c(),
                        Family::OneTwenty => ch.a() > ch.b() && ch.a() > ch.c(),
                    };
                    ensure(ordered, || format!("{family}: side order {ch}"))?;
                    next.push(ch);
                }
            }
            level = next;
        }
    }
    ensure(edges == 2 * 2 * (5 + 25 + 125 + 625), || format!("{edges} edges"))?;
    within(start.elapsed(), Duration::from_secs(1))
}

fn regression_counts(o: &Oracles) -> Result<(), String> {
    ensure(o.sixty.len() == C60, || format!("oracle C60 = {}", o.sixty.len()))?;
    ensure(o.sub.len() == C120, || format!("oracle C120 = {}", o.sub.len()))?;
    let canon_count = |v: Vec<Triple>| v.into_iter().map(|x| x.canonical()).collect::<BTreeSet<_>>().len();
    for (family, expected) in [(Family::Sixty, C60), (Family::OneTwenty, C120)] {
        let tree = canon_count(tree_triples(family, BOUND).map_err(|e| e.to_string())?);
        ensure(tree == expected, || format!("tree {family}: {tree}"))?;
        let params = canon_count(param_triples(family, BOUND).map_err(|e| e.to_string())?);
        ensure(params == expected, || format!("params {family}: {params}"))?;
    }
    let image: BTreeSet<_> = o
        .sixty
        .iter()
        .filter(|x| !x.is_equilateral())
        .map(|&x| to_sub(x).map(|y| y.canonical()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(image.len() == C120, || format!("bijection image {}", image.len()))?;
    let preimage: BTreeSet<_> = o
        .sub
        .iter()
        .flat_map(|&y| [y, eisenstein::swap_120(y)])
        .map(from_sub)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    // both orderings of each 120 triple pull back to distinct 60 triples, plus (1,1,1)
    ensure(preimage.len() + 1 == C60, || format!("bijection preimage {}", preimage.len()))
}

fn main() {
    let start = Instant::now();
    let oracles = Oracles {
        sixty: brute_force(Family::Sixty, BOUND).expect("60 sweep"),
        sub: brute_force(Family::OneTwenty, BOUND).expect("120 sweep"),
        elapsed: start.elapsed(),
    };
    let criteria: Vec<Criterion<'_>> = vec![
        ("1 seed identities", Box::new(seed_identities)),
        ("2 bijection certification at a <= 10^4", Box::new(|| bijection(&oracles))),
        ("3 tree certification (verify --family both --max-a 10000)", Box::new(tree_certification)),
        ("4 parametrization certification at a <= 10^4", Box::new(|| parametrization(&oracles))),
        ("5 conjugation identity and unimodularity", Box::new(conjugation)),
        ("6 structural invariants to depth 4", Box::new(structural_invariants)),
        ("7 regression counts C60 = 2769, C120 = 1384", Box::new(|| regression_counts(&oracles))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let t0 = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name}  ({:.1?})", t0.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
