#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::SeedableRng;
use starcoh::{ArrowTerm, BrauerArrow, Node, Tag};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `P * R` by reflexive-transitive closure over all three layers, restricted to the outer ones.
///
/// Layout: R's sources, then the middle layer (R's targets = P's sources), then P's targets.
/// Returns the classes on the outer layers, each sorted, in sorted order.
pub fn closure_compose(p: &BrauerArrow, r: &BrauerArrow) -> Vec<Vec<Node>> {
    assert_eq!(r.target(), p.source());
    let (m, n, k) = (r.source(), r.target(), p.target());
    let size = m + n + k;
    let mut rel = vec![vec![false; size]; size];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    let r_slot = |x: Node| if x.tag == Tag::Source { x.index } else { m + x.index };
    let p_slot = |x: Node| if x.tag == Tag::Source { m + x.index } else { m + n + x.index };
    let mut link = |a: usize, b: usize| {
        rel[a][b] = true;
        rel[b][a] = true;
    };
    for &(x, y) in r.pairs() {
        link(r_slot(x), r_slot(y));
    }
    for &(x, y) in p.pairs() {
        link(p_slot(x), p_slot(y));
    }
    for via in 0..size {
        let row = rel[via].clone();
        for line in rel.iter_mut() {
            if line[via] {
                for (cell, &hop) in line.iter_mut().zip(&row) {
                    *cell |= hop;
                }
            }
        }
    }
    let outer: Vec<(usize, Node)> =
        (0..m).map(|i| (i, Node::s(i))).chain((0..k).map(|j| (m + n + j, Node::t(j)))).collect();
    let mut classes: Vec<Vec<Node>> = Vec::new();
    let mut done = vec![false; size];
    for &(a, na) in &outer {
        if done[a] {
            continue;
        }
        let mut class = vec![na];
        done[a] = true;
        for &(b, nb) in &outer {
            if !done[b] && rel[a][b] {
                done[b] = true;
                class.push(nb);
            }
        }
        class.sort();
        classes.push(class);
    }
    classes.sort();
    classes
}

/// Classes of a Brauer arrow in the same shape as `closure_compose`.
pub fn classes(b: &BrauerArrow) -> Vec<Vec<Node>> {
    let mut v: Vec<Vec<Node>> = b
        .pairs()
        .iter()
        .map(|&(x, y)| {
            let mut c = vec![x, y];
            c.sort();
            c
        })
        .collect();
    v.sort();
    v
}

/// Non-identity generator occurrences.
pub fn generator_count(t: &ArrowTerm) -> usize {
    match t {
        ArrowTerm::Id(_) => 0,
        ArrowTerm::Comp(f, g) | ArrowTerm::Tens(_, f, g) => generator_count(f) + generator_count(g),
        _ => 1,
    }
}

pub fn pairs_of(b: &BrauerArrow) -> Vec<(String, String)> {
    b.pairs().iter().map(|(x, y)| (x.to_string(), y.to_string())).collect()
}
