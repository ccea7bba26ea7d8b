//! The functor from arrow terms to Brauerian split equivalences.

use std::collections::HashMap;

use crate::arrows::ArrowTerm;
use crate::brauer::{BrauerArrow, Node};
use crate::error::Error;

/// Graph of a generator; `None` for Comp and Tens.
pub fn generator_graph(gen: &ArrowTerm) -> Option<BrauerArrow> {
    let pairs = match gen {
        ArrowTerm::Comp(..) | ArrowTerm::Tens(..) => return None,
        ArrowTerm::SymConj(a, b) => {
            let (ga, gb) = (a.letter_count(), b.letter_count());
            let pairs = (0..ga + gb).map(|m| (Node::s(m), Node::t(if m < ga { m + gb } else { m - ga }))).collect();
            return Some(BrauerArrow::from_pairs(ga + gb, ga + gb, pairs).expect("valid crossing"));
        }
        ArrowTerm::SymDisj(a, b) => {
            let (ga, gb) = (a.letter_count(), b.letter_count());
            let pairs = (0..ga + gb).map(|n| (Node::s(n), Node::t(if n < gb { n + ga } else { n - gb }))).collect();
            return Some(BrauerArrow::from_pairs(ga + gb, ga + gb, pairs).expect("valid crossing"));
        }
        ArrowTerm::DeltaConj(b, a) => {
            let (ga, gb) = (a.letter_count(), b.letter_count());
            let mut pairs: Vec<(Node, Node)> = (0..ga).map(|m| (Node::s(m), Node::t(m))).collect();
            pairs.extend((0..gb).map(|i| (Node::t(ga + i), Node::t(ga + gb + i))));
            (ga, ga + 2 * gb, pairs)
        }
        ArrowTerm::SigmaDisj(b, a) => {
            let (ga, gb) = (a.letter_count(), b.letter_count());
            let mut pairs: Vec<(Node, Node)> = (0..gb).map(|i| (Node::s(i), Node::s(gb + i))).collect();
            pairs.extend((0..ga).map(|n| (Node::s(2 * gb + n), Node::t(n))));
            (2 * gb + ga, ga, pairs)
        }
        _ => {
            let (s, _) = gen.generator_type().expect("generator");
            return Some(BrauerArrow::identity(s.letter_count()));
        }
    };
    let (m, n, pairs) = pairs;
    Some(BrauerArrow::from_pairs(m, n, pairs).expect("valid cap or cup pattern"))
}

/// Graph of a well-typed term.
pub fn graph_of(f: &ArrowTerm) -> Result<BrauerArrow, Error> {
    f.type_of()?;
    Ok(graph_unchecked(f))
}

/// Graph without the typing pass; composites must still agree on letter counts.
pub fn graph_unchecked(f: &ArrowTerm) -> BrauerArrow {
    let mut memo = HashMap::new();
    go(f, &mut memo)
}

fn go(f: &ArrowTerm, memo: &mut HashMap<*const ArrowTerm, BrauerArrow>) -> BrauerArrow {
    match f {
        ArrowTerm::Comp(g, h) | ArrowTerm::Tens(_, g, h) => {
            let gg = cached(g, memo);
            let hh = cached(h, memo);
            if matches!(f, ArrowTerm::Comp(..)) {
                BrauerArrow::compose(&gg, &hh).expect("letter counts agree in a composite")
            } else {
                BrauerArrow::tensor(&gg, &hh)
            }
        }
        _ => generator_graph(f).expect("generator"),
    }
}

fn cached(f: &std::sync::Arc<ArrowTerm>, memo: &mut HashMap<*const ArrowTerm, BrauerArrow>) -> BrauerArrow {
    let key = std::sync::Arc::as_ptr(f);
    if let Some(b) = memo.get(&key) {
        return b.clone();
    }
    let b = go(f, memo);
    memo.insert(key, b.clone());
    b
}
