//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use tdhopf::laws::{run_suite, SuiteConfig};
use tdhopf::random::Shape;
use tdhopf_core::{
    free_extension, Coefficient, FreeTarget, Monomial, Space, TdAlgebra, TensorElement, TensorWord, WordCombination,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

fn w(letters: &[&[u16]]) -> TensorWord {
    TensorWord::new(letters.iter().map(|e| Monomial::from_exponents(e)).collect())
}

fn suites(alg: &TdAlgebra, names: &[&str], trials: usize, shape: Shape) -> Outcome {
    let mut parts = Vec::new();
    for name in names {
        let config = SuiteConfig {
            suite: name.to_string(),
            seed: 42,
            trials,
            shape,
        };
        let report = run_suite(alg, config).expect("known suite");
        if report.violations() > 0 {
            return fail(report.text());
        }
        parts.push(format!("{name} {}", report.laws[0].trials));
    }
    pass(parts.join(", "))
}

const SHAPE: Shape = Shape {
    vars: 2,
    max_degree: 5,
    max_length: 4,
};

fn golden_shuffle() -> Outcome {
    let start = Instant::now();
    let a = TdAlgebra::polynomial(3);
    let (x1, x2, x3): (&[u16], &[u16], &[u16]) = (&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]);
    let (x13, x12, one): (&[u16], &[u16], &[u16]) = (&[1, 0, 1], &[1, 1, 0], &[0, 0, 0]);
    let got = a.shuffle(
        &TensorElement::word(Space::Plus, w(&[x1])).unwrap(),
        &TensorElement::word(Space::Plus, w(&[x2, x3])).unwrap(),
    );
    let unit = Coefficient::one();
    let neg = Coefficient::from(-1);
    let expected: WordCombination = [
        (w(&[x1, x2, x3]), unit.clone()),
        (w(&[x2, x1, x3]), unit.clone()),
        (w(&[x2, x3, x1]), unit),
        (w(&[x2, x13]), Coefficient::lambda()),
        (w(&[x2, x13, one]), neg.clone()),
        (w(&[x12, one, x3]), neg),
    ]
    .into_iter()
    .collect();
    let elapsed = start.elapsed();
    if *got.terms() != expected {
        return fail(format!("got {got}"));
    }
    if elapsed >= Duration::from_secs(1) {
        return fail(format!("took {elapsed:?}"));
    }
    pass(format!("{got}"))
}

fn unit_letter() -> Outcome {
    let a = TdAlgebra::polynomial(2);
    let one = a.unit_monomial();
    let unit = a.unit_word();
    let words = a.enumerate_words(5);
    for word in &words {
        let expected: WordCombination =
            [(word.prepend(one.clone()), Coefficient::one()), (word.clone(), Coefficient::lambda())].into_iter().collect();
        if *a.shuffle_words(&unit, word) != expected || *a.shuffle_words(word, &unit) != expected {
            return fail(format!("fails on {word}"));
        }
    }
    pass(format!("{} words of degree ≤ 5", words.len()))
}

fn extension() -> Outcome {
    let a = TdAlgebra::polynomial(2);
    let target = FreeTarget(&a);
    let images = target.inclusion_images();
    let words = a.enumerate_words(4);
    for word in &words {
        let e = a.word(word.clone()).unwrap();
        if free_extension(&target, &images, &e).unwrap() != e {
            return fail(format!("identity extension moves {word}"));
        }
    }
    let random = suites(&a, &["extension"], 100, SHAPE);
    if !random.passed {
        return random;
    }
    pass(format!("identity on {} words; {}", words.len(), random.detail))
}

fn right_counit() -> Outcome {
    let mut count = 0;
    for vars in 1..=3 {
        let a = TdAlgebra::polynomial(vars);
        for i in 0..vars {
            let x = a.word(TensorWord::letter(a.generator(i))).unwrap();
            let px = a.p_shift(&x).unwrap();
            let value = a.counit_right(&a.coproduct(&px).unwrap());
            if !value.is_zero() || px.is_zero() || value == px {
                return fail(format!("(id ⊗ ε)Δ(P({x})) = {value}"));
            }
            count += 1;
        }
    }
    pass(format!("(id ⊗ ε)Δ(P(x)) = 0 ≠ P(x) for {count} generators over 1..3 variables"))
}

fn hopf() -> Outcome {
    let start = Instant::now();
    let a1 = TdAlgebra::polynomial(1);
    let p1 = a1.unit_word().prepend(a1.unit_monomial());
    if a1.word_degree(&p1).unwrap() != 1 {
        return fail("deg(P(1)) ≠ 1");
    }
    let mut parts = Vec::new();
    for (vars, bound) in [(1, 5), (2, 4)] {
        let a = TdAlgebra::polynomial(vars);
        let r = a.hopf_check(bound).unwrap();
        if !r.passed() {
            return fail(tdhopf::app::hopf_text(&r));
        }
        parts.push(format!(
            "{vars} var(s) degree ≤ {bound}: {} words, {} products",
            r.words, r.product_filtration.checked
        ));
    }
    pass(format!("deg(P(1)) = 1; {} in {:?}", parts.join("; "), start.elapsed()))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_tdhopf");
    let run = || Command::new(bin).args(["laws", "--suite", "all", "--seed", "42"]).output().expect("binary runs");
    let (first, second) = (run(), run());
    if !first.status.success() || !second.status.success() {
        return fail(String::from_utf8_lossy(&first.stdout).into_owned());
    }
    if first.stdout != second.stdout {
        return fail("reports differ");
    }
    pass(format!("{} identical bytes, exit 0", first.stdout.len()))
}

fn main() -> ExitCode {
    let a = TdAlgebra::polynomial(2);
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("1 golden shuffle expansion", Box::new(golden_shuffle)),
        ("2 unit letter shuffle", Box::new(unit_letter)),
        (
            "3 shuffle laws and diamond monoid",
            Box::new(|| suites(&a, &["shuffle-comm", "shuffle-assoc", "diamond-monoid"], 200, SHAPE)),
        ),
        ("4 right shift is L-TD", Box::new(|| suites(&a, &["td-operator"], 200, SHAPE))),
        ("5 double product", Box::new(|| suites(&a, &["star-assoc", "modified-td"], 100, SHAPE))),
        ("6 universal extension", Box::new(extension)),
        (
            "7 bialgebra laws",
            Box::new(|| suites(&a, &["coproduct-hom", "counit-hom", "coassoc", "left-counit", "square-td"], 100, SHAPE)),
        ),
        ("8 right counit failure witnessed", Box::new(right_counit)),
        ("9 filtration and antipode", Box::new(hopf)),
        ("10 deterministic law report", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let o = check();
        let status = if o.passed { "PASS" } else { "FAIL" };
        if !o.passed {
            failed += 1;
        }
        let detail = o.detail.lines().next().unwrap_or("").to_string();
        println!("{status} criterion {name} ({:.2?}): {detail}", start.elapsed());
        if !o.passed && o.detail.lines().count() > 1 {
            println!("{}", o.detail);
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
