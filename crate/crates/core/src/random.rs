//! Random formulae, terms, nets and diagrams for property tests and benches.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrows::{catalog, rewrite, ArrowTerm, AxiomSchema, Direction, Subst, System};
use crate::brauer::{BrauerArrow, Node};
use crate::error::Error;
use crate::formula::{Conn, Context, Formula, Path, Step};
use crate::gentzen::{gentzenize, Net};

const POOL: [&str; 5] = ["p", "q", "r", "s", "t"];

fn letter<R: Rng>(rng: &mut R) -> Formula {
    Formula::letter(POOL.choose(rng).expect("nonempty pool"))
}

fn conn<R: Rng>(rng: &mut R) -> Conn {
    if rng.gen_bool(0.5) {
        Conn::Conj
    } else {
        Conn::Disj
    }
}

/// A formula of `system` with exactly `letters` letter occurrences.
pub fn formula<R: Rng>(rng: &mut R, system: System, letters: usize) -> Formula {
    let letters = letters.max(1);
    let mut f = if letters == 1 {
        letter(rng)
    } else {
        let k = rng.gen_range(1..letters);
        Formula::bin(conn(rng), formula(rng, system, k), formula(rng, system, letters - k))
    };
    if system >= System::Pn && rng.gen_bool(0.2) {
        f = Formula::neg(f);
    }
    if system == System::S && rng.gen_bool(0.15) {
        let (c, u) = if rng.gen_bool(0.5) { (Conn::Conj, Formula::Top) } else { (Conn::Disj, Formula::Bot) };
        f = if rng.gen_bool(0.5) { Formula::bin(c, f, u) } else { Formula::bin(c, u, f) };
    }
    f
}

/// A formula with between one and `max_letters` letters.
pub fn formula_upto<R: Rng>(rng: &mut R, system: System, max_letters: usize) -> Formula {
    let n = rng.gen_range(1..=max_letters.max(1));
    formula(rng, system, n)
}

/// `gen` placed at `path` in `f`, identities around it.
fn lift(f: &Formula, path: &[Step], gen: ArrowTerm) -> ArrowTerm {
    let Some((step, rest)) = path.split_first() else {
        return gen;
    };
    let (c, (a, b)) = match f {
        Formula::Conj(a, b) => (Conn::Conj, (a, b)),
        Formula::Disj(a, b) => (Conn::Disj, (a, b)),
        _ => unreachable!("lift path runs through a binary connective"),
    };
    match step {
        Step::Left => ArrowTerm::tens(c, lift(a, rest, gen), ArrowTerm::Id((**b).clone())),
        _ => ArrowTerm::tens(c, ArrowTerm::Id((**a).clone()), lift(b, rest, gen)),
    }
}

fn binary_positions(f: &Formula, here: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
    out.push(here.clone());
    if let Formula::Conj(a, b) | Formula::Disj(a, b) = f {
        here.push(Step::Left);
        binary_positions(a, here, out);
        here.pop();
        here.push(Step::Right);
        binary_positions(b, here, out);
        here.pop();
    }
}

/// Generators of `system` applicable to `g`.
fn moves<R: Rng>(rng: &mut R, system: System, g: &Formula, room: usize) -> Vec<ArrowTerm> {
    use ArrowTerm as T;
    let mut out = Vec::new();
    match g {
        Formula::Conj(a, bc) => {
            out.push(T::SymConj((**a).clone(), (**bc).clone()));
            if let Formula::Conj(b, c) = &**bc {
                out.push(T::AssocFwd(Conn::Conj, (**a).clone(), (**b).clone(), (**c).clone()));
            }
            if let Formula::Conj(x, y) = &**a {
                out.push(T::AssocBwd(Conn::Conj, (**x).clone(), (**y).clone(), (**bc).clone()));
            }
            if let Formula::Disj(b, c) = &**bc {
                out.push(T::Dist((**a).clone(), (**b).clone(), (**c).clone()));
            }
            if **bc == Formula::Top && system == System::S {
                out.push(T::UnitDelFwd(Conn::Conj, (**a).clone()));
            }
        }
        Formula::Disj(a, bc) => {
            out.push(T::SymDisj((**bc).clone(), (**a).clone()));
            if let Formula::Disj(b, c) = &**bc {
                out.push(T::AssocFwd(Conn::Disj, (**a).clone(), (**b).clone(), (**c).clone()));
            }
            if let Formula::Disj(x, y) = &**a {
                out.push(T::AssocBwd(Conn::Disj, (**x).clone(), (**y).clone(), (**bc).clone()));
            }
            if let Formula::Conj(b, nb) = &**a {
                if **nb == Formula::neg((**b).clone()) && system >= System::Pn {
                    out.push(T::SigmaDisj((**b).clone(), (**bc).clone()));
                }
            }
            if **bc == Formula::Bot && system == System::S {
                out.push(T::UnitDelFwd(Conn::Disj, (**a).clone()));
            }
        }
        _ => {}
    }
    if system >= System::Pn && room >= 2 {
        out.push(T::DeltaConj(letter(rng), g.clone()));
    }
    if system == System::S {
        out.push(T::UnitDelBwd(conn(rng), g.clone()));
    }
    out
}

/// A term with the given source made of at most `budget` generators.
pub fn term_from<R: Rng>(
    rng: &mut R,
    system: System,
    source: &Formula,
    budget: usize,
    max_letters: usize,
) -> ArrowTerm {
    if budget >= 2 && rng.gen_bool(0.25) {
        if let Some((c, a, b)) = source.as_bin() {
            let k = rng.gen_range(1..budget);
            let room_a = max_letters.saturating_sub(b.letter_count());
            let room_b = max_letters.saturating_sub(a.letter_count());
            return ArrowTerm::tens(
                c,
                term_from(rng, system, a, k, room_a),
                term_from(rng, system, b, budget - k, room_b),
            );
        }
    }
    let mut cur = source.clone();
    let mut steps: Vec<ArrowTerm> = Vec::new();
    for _ in 0..budget {
        let mut positions = Vec::new();
        binary_positions(&cur, &mut Vec::new(), &mut positions);
        let room = max_letters.saturating_sub(cur.letter_count());
        let mut options = Vec::new();
        for p in positions {
            let g = cur.at(&Path::new(p.clone())).expect("position").clone();
            for m in moves(rng, system, &g, room) {
                options.push((p.clone(), m));
            }
        }
        let Some((p, m)) = options.choose(rng).cloned() else { break };
        let step = lift(&cur, &p, m);
        cur = step.target().expect("well typed by construction");
        steps.push(step);
    }
    if steps.is_empty() {
        return ArrowTerm::Id(source.clone());
    }
    steps.reverse();
    ArrowTerm::chain(steps)
}

/// A random well-typed term of `system`.
pub fn term<R: Rng>(rng: &mut R, system: System, max_letters: usize, budget: usize) -> ArrowTerm {
    let start = max_letters.clamp(1, 3);
    let a = formula_upto(rng, system, start);
    let b = rng.gen_range(1..=budget.max(1));
    term_from(rng, system, &a, b, max_letters)
}

/// Both sides of a random instance of `schema`.
pub fn schema_instance<R: Rng>(
    rng: &mut R,
    schema: &AxiomSchema,
    max_letters: usize,
) -> Result<(ArrowTerm, ArrowTerm), Error> {
    let sys = schema.system;
    let mut sub = Subst::default();
    for v in &schema.arrow_vars {
        let src = match sub.formulas.get(v.source.to_string().as_str()) {
            Some(f) => f.clone(),
            None => {
                let f = formula_upto(rng, sys, max_letters.min(3));
                sub = sub.formula(&v.source.to_string(), f.clone());
                f
            }
        };
        let budget = rng.gen_range(0..=3);
        let t = term_from(rng, sys, &src, budget, max_letters);
        let tgt = t.target()?;
        match sub.formulas.get(v.target.to_string().as_str()) {
            Some(bound) if *bound != tgt => return Err(Error::NoMatch(format!("{} target already bound", v.name))),
            Some(_) => {}
            None => sub = sub.formula(&v.target.to_string(), tgt),
        }
        sub = sub.arrow(&v.name, t);
    }
    for name in schema.formula_vars() {
        if !sub.formulas.contains_key(name) {
            let n = rng.gen_range(1..=max_letters.clamp(1, 2));
            sub = sub.formula(name, formula(rng, sys, n));
        }
    }
    schema.instance(&sub)
}

/// Applies up to `steps` random rewrites by schemas of `system` or below; returns the term and the count applied.
pub fn mutate<R: Rng>(rng: &mut R, f: &ArrowTerm, system: System, steps: usize) -> (ArrowTerm, usize) {
    let schemas: Vec<&AxiomSchema> = catalog().iter().filter(|s| s.system <= system).collect();
    let mut cur = f.clone();
    let mut done = 0;
    for _ in 0..steps {
        for _attempt in 0..64 {
            let s = schemas.choose(rng).expect("nonempty catalog");
            let d = if rng.gen_bool(0.5) { Direction::Forward } else { Direction::Backward };
            let hits: Vec<ArrowTerm> = cur.term_paths().iter().filter_map(|p| rewrite(&cur, p, s, d).ok()).collect();
            if let Some(next) = hits.choose(rng) {
                cur = next.clone();
                done += 1;
                break;
            }
        }
    }
    (cur, done)
}

/// A uniformly random perfect matching on `m + n` points.
pub fn brauer<R: Rng>(rng: &mut R, m: usize, n: usize) -> BrauerArrow {
    assert!((m + n).is_multiple_of(2), "odd number of points");
    let mut pts: Vec<Node> = (0..m).map(Node::s).chain((0..n).map(Node::t)).collect();
    pts.shuffle(rng);
    let pairs = pts.chunks(2).map(|c| (c[0], c[1])).collect();
    BrauerArrow::from_pairs(m, n, pairs).expect("perfect matching")
}

/// A composable triple of sizes at most `max`.
pub fn brauer_triple<R: Rng>(rng: &mut R, max: usize) -> (BrauerArrow, BrauerArrow, BrauerArrow) {
    let parity = rng.gen_range(0..2);
    let mut size = || loop {
        let k = rng.gen_range(0..=max);
        if k % 2 == parity {
            break k;
        }
    };
    let (a, b, c, d) = (size(), size(), size(), size());
    (brauer(rng, a, b), brauer(rng, b, c), brauer(rng, c, d))
}

fn superficial_contexts(f: &Formula, conn: Conn) -> Vec<(Context, Formula)> {
    let mut out = Vec::new();
    let mut paths = Vec::new();
    binary_positions(f, &mut Vec::new(), &mut paths);
    for p in paths {
        if let Ok(cf) = Context::at(f, &Path::new(p), conn) {
            out.push(cf);
        }
    }
    out
}

fn random_conj_context<R: Rng>(rng: &mut R, room: usize) -> Context {
    let mut x = Context::hole(Conn::Conj);
    let mut left = room;
    while left > 0 && rng.gen_bool(0.5) {
        let k = rng.gen_range(1..=left);
        let side = formula(rng, System::Pn, k);
        left -= k;
        let layer = if rng.gen_bool(0.5) {
            Context::with_right(Context::hole(Conn::Conj), side)
        } else {
            Context::with_left(side, Context::hole(Conn::Conj))
        };
        x = layer.compose(&x);
    }
    x
}

/// A net with between one and `max_cuts` cuts over formulae of at most `max_letters` letters.
pub fn cut_net<R: Rng>(rng: &mut R, max_letters: usize, max_cuts: usize) -> Net {
    loop {
        let candidate = if rng.gen_bool(0.5) {
            let t = term(rng, System::S, max_letters, 4);
            gentzenize(&t).ok()
        } else {
            contextual_cut(rng, max_letters)
        };
        if let Some(n) = candidate {
            if (1..=max_cuts).contains(&n.cut_count()) {
                return n;
            }
        }
    }
}

fn contextual_cut<R: Rng>(rng: &mut R, max_letters: usize) -> Option<Net> {
    let gt = term(rng, System::S, max_letters, 2);
    let g = gentzenize(&gt).ok()?;
    let occ = superficial_contexts(g.target(), Conn::Disj);
    let (y, a) = occ.choose(rng)?.clone();
    let room = max_letters.saturating_sub(a.letter_count());
    let x = random_conj_context(rng, room);
    let src = x.apply(&a);
    let b = rng.gen_range(0..=2);
    let f = gentzenize(&term_from(rng, System::S, &src, b, max_letters)).ok()?;
    Net::cut(x, y, a, f, g).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn terms_are_well_typed() {
        let mut rng = StdRng::seed_from_u64(7);
        for sys in [System::Ds, System::Pn, System::S] {
            for _ in 0..200 {
                let t = term(&mut rng, sys, 5, 8);
                t.type_of().unwrap();
                if sys == System::Ds {
                    assert!(t.is_ds_term(), "{t}");
                }
                if sys == System::Pn {
                    assert!(t.is_pn_term(), "{t}");
                }
            }
        }
    }

    #[test]
    fn formula_letter_counts() {
        let mut rng = StdRng::seed_from_u64(1);
        for n in 1..6 {
            assert_eq!(formula(&mut rng, System::S, n).letter_count(), n);
        }
    }

    #[test]
    fn nets_have_bounded_cuts() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let n = cut_net(&mut rng, 4, 3);
            assert!((1..=3).contains(&n.cut_count()));
        }
    }

    #[test]
    fn every_schema_samples() {
        let mut rng = StdRng::seed_from_u64(11);
        for s in catalog() {
            let ok = (0..50).any(|_| schema_instance(&mut rng, s, 5).is_ok());
            assert!(ok, "{}", s.name);
        }
    }
}
