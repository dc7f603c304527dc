//! One line per acceptance criterion. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use deltacat::dyck::{cat_poly, CatMethod, DecoratedPath, DyckPath};
use deltacat::exact::RatFunc;
use deltacat::macdonald::{c_alpha, htilde, nabla};
use deltacat::symfunc::{Composition, Partition, SymFunc};
use deltacat::verify::{verify_comb, verify_macdonald, verify_main, verify_sf, Report, VerifyOptions};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_report(r: deltacat::Result<Report>) -> Outcome {
    match r {
        Ok(r) => {
            let first = r.cases.iter().find(|c| !c.pass).map(|c| format!(", first failure {}", c.case_id));
            Outcome {
                pass: r.all_passed(),
                detail: format!("{}/{} cases{}", r.summary.passed, r.summary.total, first.unwrap_or_default()),
            }
        }
        Err(e) => Outcome { pass: false, detail: format!("error: {e}") },
    }
}

fn opts(max_n: usize) -> VerifyOptions {
    VerifyOptions { max_n, timings: false, cache_dir: None }
}

fn worked_example() -> Outcome {
    let p = DyckPath::parse("0,1,2,2,1,1,2,0,1,1,2,1,0,1,2").unwrap();
    let (_, b) = p.b_sequence();
    let (rot, _) = DecoratedPath::undecorated(p.clone()).rotate().unwrap();
    let expect_b = [0, 1, 2, 3, 4, 4, 5, 5, 6, 6, 7, 6, 6, 4, 2];
    let expect_rot = [0, 1, 1, 2, 1, 0, 1, 2, 0, 1, 1, 0, 0, 1];
    let pass = b == expect_b && p.area() == 17 && rot.path.area_seq() == expect_rot && rot.path.area() == 11;
    Outcome { pass, detail: format!("b={b:?} area={} rotated={} area={}", p.area(), rot.path, rot.path.area()) }
}

fn specializations() -> Outcome {
    let catalan = [1u64, 2, 5, 14, 42, 132, 429, 1430];
    let full = [1u64, 4, 20, 112, 672, 4224, 27456, 183040];
    let mut bad = Vec::new();
    for n in 1..=8 {
        let p = cat_poly(n, CatMethod::DecoratedSum);
        if p.eval([1, 1, 0, 0]) != catalan[n - 1].into() || p.eval([1, 1, 1, 1]) != full[n - 1].into() {
            bad.push(n);
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("n=1..8, mismatches at {bad:?}") }
}

fn method_agreement() -> Outcome {
    let bad: Vec<usize> =
        (1..=7).filter(|&n| cat_poly(n, CatMethod::DecoratedSum) != cat_poly(n, CatMethod::ProductForm)).collect();
    Outcome { pass: bad.is_empty(), detail: format!("n=1..7, mismatches at {bad:?}") }
}

fn micro_values() -> Outcome {
    let p = |v: &[usize]| Partition::new(v.to_vec());
    let comp = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
    let s11 = |f: &SymFunc| f.to_s().coeff(&p(&[1, 1])).to_string();
    let checks = [
        ("<nabla e2, s11>", s11(&nabla(&SymFunc::e(2), 1)), "q + t".to_string()),
        ("<nabla C(1,1), s11>", s11(&nabla(&c_alpha(&comp(&[1, 1])), 1)), "q".to_string()),
        ("<nabla C(2), s11>", s11(&nabla(&c_alpha(&comp(&[2])), 1)), "t".to_string()),
        ("C(1)", c_alpha(&comp(&[1])).to_s().to_string(), SymFunc::e(1).to_s().to_string()),
        (
            "C(2)",
            c_alpha(&comp(&[2])).to_s().to_string(),
            SymFunc::h(2).scale(&RatFunc::q().inv().unwrap().neg()).to_s().to_string(),
        ),
        ("Ht(2)", htilde(&p(&[2])).to_string(), "s[2] + q*s[1,1]".to_string()),
        ("Ht(1,1)", htilde(&p(&[1, 1])).to_string(), "s[2] + t*s[1,1]".to_string()),
    ];
    let bad: Vec<String> =
        checks.iter().filter(|(_, a, b)| a != b).map(|(name, a, b)| format!("{name}: {a} vs {b}")).collect();
    Outcome { pass: bad.is_empty(), detail: format!("{} values, mismatches {bad:?}", checks.len()) }
}

fn main() -> ExitCode {
    type Check = (&'static str, Option<Duration>, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Check> = vec![
        ("1 main theorem, n <= 6", Some(Duration::from_secs(600)), Box::new(|| from_report(verify_main(&opts(6))))),
        ("2 worked example b-sequence and rotation", None, Box::new(worked_example)),
        ("3 specializations n = 1..8", Some(Duration::from_secs(120)), Box::new(specializations)),
        ("4 decorated sum = product form, n <= 7", None, Box::new(method_agreement)),
        (
            "5 combinatorial recurrences and rotation, size <= 8",
            Some(Duration::from_secs(300)),
            Box::new(|| from_report(verify_comb(&opts(8)))),
        ),
        ("6 Macdonald toolkit", None, Box::new(|| from_report(verify_macdonald(&opts(6))))),
        ("7 recurrence, kernel and lemma sweeps", None, Box::new(|| from_report(verify_sf(&opts(5))))),
        ("8 pinned micro-values", None, Box::new(micro_values)),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if let Some(b) = budget {
            if elapsed > b {
                out.pass = false;
                out.detail.push_str(&format!(", over the {}s budget", b.as_secs()));
            }
        }
        let status = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {status} (exact; {}; {:.1}s)", out.detail, elapsed.as_secs_f64());
        if !out.pass {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
