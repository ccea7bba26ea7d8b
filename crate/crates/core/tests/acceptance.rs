//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod support;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use starcoh::arrows::{catalog, derived, System};
use starcoh::cutelim::is_cut_free;
use starcoh::graph::generator_graph;
use starcoh::{
    denote, equal_graphwise, gentzenize, graph_of, net_type, parse_formula, random, worked_example, ArrowTerm,
    BrauerArrow, Conn, Formula, Node, Verdict,
};
use support::{classes, closure_compose, generator_count, rng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f(s: &str) -> Formula {
    parse_formula(s).expect("formula literal")
}

fn compose_example() -> Outcome {
    let (p, r) = worked_example();
    let start = Instant::now();
    let c = BrauerArrow::compose(&p, &r).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let want = BrauerArrow::from_pairs(3, 1, vec![(Node::s(0), Node::t(0)), (Node::s(1), Node::s(2))]).unwrap();
    ensure(c == want, || format!("got {}", c.to_json()))?;
    ensure(c.to_json() == r#"{"source":3,"target":1,"pairs":[["s0","t0"],["s1","s2"]]}"#, || c.to_json())?;
    ensure(took < Duration::from_millis(1), || format!("took {took:?}"))?;
    Ok(format!("{} in {took:?}", c.to_json()))
}

fn generator_diagrams() -> Outcome {
    let (a, b) = (f("p | q"), f("(q | ~r) | q"));
    let s = Node::s;
    let t = Node::t;
    let cases = [
        (
            "sym_conj",
            ArrowTerm::SymConj(a.clone(), b.clone()),
            (5, 5, vec![(s(0), t(3)), (s(1), t(4)), (s(2), t(0)), (s(3), t(1)), (s(4), t(2))]),
        ),
        (
            "sym_disj",
            ArrowTerm::SymDisj(a.clone(), b.clone()),
            (5, 5, vec![(s(3), t(0)), (s(4), t(1)), (s(0), t(2)), (s(1), t(3)), (s(2), t(4))]),
        ),
        (
            "delta_conj",
            ArrowTerm::DeltaConj(a.clone(), b.clone()),
            (3, 7, vec![(s(0), t(0)), (s(1), t(1)), (s(2), t(2)), (t(3), t(5)), (t(4), t(6))]),
        ),
        (
            "sigma_disj",
            ArrowTerm::SigmaDisj(a.clone(), b.clone()),
            (7, 3, vec![(s(0), s(2)), (s(1), s(3)), (s(4), t(0)), (s(5), t(1)), (s(6), t(2))]),
        ),
    ];
    for (name, gen, (m, n, pairs)) in cases {
        let want = BrauerArrow::from_pairs(m, n, pairs).unwrap();
        let got = generator_graph(&gen).ok_or("not a generator")?;
        ensure(got == want, || format!("{name}: got {}, want {}", got.to_json(), want.to_json()))?;
    }
    Ok("sym_conj, sym_disj, delta_conj, sigma_disj match".into())
}

fn brauer_laws() -> Outcome {
    let mut g = rng(3);
    let start = Instant::now();
    let mut compositions = 0;
    for i in 0..1000 {
        let (r, p, q) = random::brauer_triple(&mut g, 8);
        let pr = BrauerArrow::compose(&p, &r).map_err(|e| e.to_string())?;
        let qp = BrauerArrow::compose(&q, &p).map_err(|e| e.to_string())?;
        let left = BrauerArrow::compose(&q, &pr).map_err(|e| e.to_string())?;
        let right = BrauerArrow::compose(&qp, &r).map_err(|e| e.to_string())?;
        ensure(left == right, || format!("case {i}: associativity"))?;
        for x in [&r, &p, &q] {
            let l = BrauerArrow::compose(&BrauerArrow::identity(x.target()), x).unwrap();
            let rr = BrauerArrow::compose(x, &BrauerArrow::identity(x.source())).unwrap();
            ensure(&l == x && &rr == x, || format!("case {i}: identity law"))?;
        }
        for (outer, inner, c) in [(&p, &r, &pr), (&q, &p, &qp), (&q, &pr, &left), (&qp, &r, &right)] {
            ensure(classes(c) == closure_compose(outer, inner), || format!("case {i}: oracle disagrees"))?;
            compositions += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(5), || format!("took {took:?}"))?;
    Ok(format!("1000 triples, {compositions} compositions checked against closure, {took:?}"))
}

fn functor_well_defined() -> Outcome {
    let mut g = rng(4);
    let start = Instant::now();
    let cat = catalog();
    for schema in cat {
        let mut done = 0;
        let mut attempts = 0;
        while done < 100 {
            attempts += 1;
            ensure(attempts <= 100_000, || format!("{}: could not sample instances", schema.name))?;
            let Ok((lhs, rhs)) = random::schema_instance(&mut g, schema, 5) else { continue };
            let gl = graph_of(&lhs).map_err(|e| format!("{}: {e}", schema.name))?;
            let gr = graph_of(&rhs).map_err(|e| format!("{}: {e}", schema.name))?;
            ensure(gl == gr, || format!("{}: {lhs} vs {rhs}", schema.name))?;
            done += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("{} schemas x 100 instances, {took:?}", cat.len()))
}

fn gentzenization() -> Outcome {
    let mut g = rng(5);
    let start = Instant::now();
    for i in 0..500 {
        let t = random::term(&mut g, System::S, 5, 12);
        ensure(generator_count(&t) <= 12, || format!("case {i}: too many generators"))?;
        let ty = t.type_of().map_err(|e| e.to_string())?;
        let n = gentzenize(&t).map_err(|e| format!("case {i}: {e}"))?;
        ensure(net_type(&n) == ty, || format!("case {i}: type of {t}"))?;
        let gn = graph_of(&denote(&n)).map_err(|e| e.to_string())?;
        ensure(gn == graph_of(&t).unwrap(), || format!("case {i}: graph of {t}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("500 terms, {took:?}"))
}

fn cut_elimination() -> Outcome {
    let mut g = rng(6);
    let start = Instant::now();
    let mut steps = 0;
    for i in 0..300 {
        let n = random::cut_net(&mut g, 4, 3);
        let (out, trace) = starcoh::eliminate(&n).map_err(|e| format!("case {i}: {e}\n{n}"))?;
        ensure(is_cut_free(&out), || format!("case {i}: cuts remain"))?;
        ensure(net_type(&out) == net_type(&n), || format!("case {i}: type changed"))?;
        let before = graph_of(&denote(&n)).map_err(|e| e.to_string())?;
        let after = graph_of(&denote(&out)).map_err(|e| e.to_string())?;
        ensure(before == after, || format!("case {i}: graph changed\n{n}"))?;
        for s in &trace {
            ensure(s.after.iter().all(|c| *c < s.before), || format!("case {i}: not decreasing at {s}"))?;
        }
        steps += trace.len();
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    Ok(format!("300 nets, {steps} reduction steps, {took:?}"))
}

fn decision_soundness() -> Outcome {
    let mut g = rng(7);
    let start = Instant::now();
    let mut rewrites = 0;
    for i in 0..300 {
        let t = random::term(&mut g, System::Pn, 5, 8);
        let (m, k) = random::mutate(&mut g, &t, System::Pn, 5);
        ensure(m.is_pn_term(), || format!("case {i}: mutant left the fragment"))?;
        let d = equal_graphwise(&t, &m).map_err(|e| e.to_string())?;
        ensure(d.verdict == Verdict::Equal, || format!("case {i}: {t} vs {m}: {}", d.verdict))?;
        rewrites += k;
    }
    let p = f("p");
    let c = ArrowTerm::SymConj(p.clone(), p.clone());
    let d = equal_graphwise(&c, &ArrowTerm::Id(f("p & p"))).map_err(|e| e.to_string())?;
    ensure(d.verdict == Verdict::Unequal, || format!("crossing vs identity: {}", d.verdict))?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("300 pairs Equal after {rewrites} rewrites, crossing Unequal, {took:?}"))
}

/// Unit-laden rewrappings of `f`, each with the same equality as `f` itself.
fn unit_variants(t: &ArrowTerm) -> Vec<ArrowTerm> {
    let (a, b) = t.type_of().expect("typed");
    let top = ArrowTerm::Id(Formula::Top);
    let bot = ArrowTerm::Id(Formula::Bot);
    vec![
        ArrowTerm::tens(Conn::Conj, t.clone(), top.clone()),
        ArrowTerm::comp(ArrowTerm::UnitDelFwd(Conn::Conj, b.clone()), ArrowTerm::tens(Conn::Conj, t.clone(), top)),
        ArrowTerm::comp(ArrowTerm::tens(Conn::Disj, t.clone(), bot), ArrowTerm::UnitDelBwd(Conn::Disj, a.clone())),
        ArrowTerm::comp(
            ArrowTerm::tens(Conn::Disj, ArrowTerm::Id(Formula::neg(a.clone())), t.clone()),
            derived::tau_l(&a),
        ),
    ]
}

fn unit_regime() -> Outcome {
    let mut g = rng(8);
    let pp = f("p & p");
    let mut compared = 0;
    for i in 0..100 {
        let t = random::term(&mut g, System::Pn, 4, 6);
        let (m, _) = random::mutate(&mut g, &t, System::Pn, 3);
        let crossed = (
            ArrowTerm::tens(Conn::Conj, t.clone(), ArrowTerm::Id(pp.clone())),
            ArrowTerm::tens(Conn::Conj, t.clone(), ArrowTerm::SymConj(f("p"), f("p"))),
        );
        for (x, y) in [(t.clone(), m), crossed] {
            let direct = equal_graphwise(&x, &y).map_err(|e| e.to_string())?.verdict;
            for (vx, vy) in unit_variants(&x).into_iter().zip(unit_variants(&y)) {
                let v = equal_graphwise(&vx, &vy).map_err(|e| format!("case {i}: {e}"))?.verdict;
                ensure(v == direct, || format!("case {i}: {vx} vs {vy}: {v}, direct {direct}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} unit-padded comparisons agree with direct verdicts"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked composition", compose_example),
        ("generator diagrams", generator_diagrams),
        ("Brauer category laws", brauer_laws),
        ("axioms hold in graphs", functor_well_defined),
        ("gentzenization", gentzenization),
        ("cut elimination", cut_elimination),
        ("decision soundness", decision_soundness),
        ("unit-regime decision", unit_regime),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("AC{} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC{} FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
