//! Split equivalences between finite ordinals and the Brauerian ones among them.

use std::collections::BTreeMap;
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Source,
    Target,
}

/// A tagged element `i_s` or `j_t`; sources order before targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub tag: Tag,
    pub index: usize,
}

impl Node {
    pub fn s(index: usize) -> Node {
        Node { tag: Tag::Source, index }
    }

    pub fn t(index: usize) -> Node {
        Node { tag: Tag::Target, index }
    }

    fn parse(s: &str) -> Option<Node> {
        let (tag, rest) = match s.as_bytes().first()? {
            b's' => (Tag::Source, &s[1..]),
            b't' => (Tag::Target, &s[1..]),
            _ => return None,
        };
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Some(Node { tag, index: rest.parse().ok()? })
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            Tag::Source => write!(f, "s{}", self.index),
            Tag::Target => write!(f, "t{}", self.index),
        }
    }
}

/// Partition of `m` source and `n` target nodes, kept canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitEquivalence {
    source: usize,
    target: usize,
    blocks: Vec<Vec<Node>>,
}

impl SplitEquivalence {
    pub fn new(source: usize, target: usize, blocks: Vec<Vec<Node>>) -> Result<Self, Error> {
        let mut seen = vec![false; source + target];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::IllTyped("empty block".into()));
            }
            b.sort();
            for node in b.iter() {
                let slot = match node.tag {
                    Tag::Source if node.index < source => node.index,
                    Tag::Target if node.index < target => source + node.index,
                    _ => return Err(Error::IllTyped(format!("node {node} out of range for {source}|-{target}"))),
                };
                if std::mem::replace(&mut seen[slot], true) {
                    return Err(Error::IllTyped(format!("node {node} occurs twice")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::IllTyped("blocks do not cover every node".into()));
        }
        blocks.sort();
        Ok(SplitEquivalence { source, target, blocks })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn blocks(&self) -> &[Vec<Node>] {
        &self.blocks
    }

    pub fn is_brauerian(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    pub fn to_brauer(&self) -> Option<BrauerArrow> {
        if !self.is_brauerian() {
            return None;
        }
        Some(BrauerArrow {
            source: self.source,
            target: self.target,
            pairs: self.blocks.iter().map(|b| (b[0], b[1])).collect(),
        })
    }

    /// `p * r`: glue the targets of `r` to the sources of `p` and keep the outer classes.
    pub fn compose(p: &SplitEquivalence, r: &SplitEquivalence) -> Result<SplitEquivalence, Error> {
        if r.target != p.source {
            return Err(Error::SizeMismatch(r.target, p.source));
        }
        let (m, n, k) = (r.source, r.target, p.target);
        let mut uf = UnionFind::<usize>::new(m + n + k);
        let r_slot = |x: &Node| match x.tag {
            Tag::Source => x.index,
            Tag::Target => m + x.index,
        };
        let p_slot = |x: &Node| match x.tag {
            Tag::Source => m + x.index,
            Tag::Target => m + n + x.index,
        };
        for b in &r.blocks {
            for x in &b[1..] {
                uf.union(r_slot(&b[0]), r_slot(x));
            }
        }
        for b in &p.blocks {
            for x in &b[1..] {
                uf.union(p_slot(&b[0]), p_slot(x));
            }
        }
        let mut classes: BTreeMap<usize, Vec<Node>> = BTreeMap::new();
        for i in 0..m {
            classes.entry(uf.find(i)).or_default().push(Node::s(i));
        }
        for j in 0..k {
            classes.entry(uf.find(m + n + j)).or_default().push(Node::t(j));
        }
        SplitEquivalence::new(m, k, classes.into_values().collect())
    }
}

impl From<&BrauerArrow> for SplitEquivalence {
    fn from(b: &BrauerArrow) -> Self {
        SplitEquivalence {
            source: b.source,
            target: b.target,
            blocks: b.pairs.iter().map(|&(x, y)| vec![x, y]).collect(),
        }
    }
}

/// Brauerian split equivalence `source ⊢ target`; pairs are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrauerArrow {
    source: usize,
    target: usize,
    pairs: Vec<(Node, Node)>,
}

impl BrauerArrow {
    pub fn from_pairs(source: usize, target: usize, pairs: Vec<(Node, Node)>) -> Result<Self, Error> {
        let blocks = pairs.into_iter().map(|(x, y)| vec![x, y]).collect();
        Ok(SplitEquivalence::new(source, target, blocks)?.to_brauer().expect("pairs are two-element blocks"))
    }

    pub fn identity(n: usize) -> BrauerArrow {
        BrauerArrow { source: n, target: n, pairs: (0..n).map(|i| (Node::s(i), Node::t(i))).collect() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn pairs(&self) -> &[(Node, Node)] {
        &self.pairs
    }

    pub fn compose(p: &BrauerArrow, r: &BrauerArrow) -> Result<BrauerArrow, Error> {
        let c = SplitEquivalence::compose(&p.into(), &r.into())?;
        Ok(c.to_brauer().expect("composite of Brauerian arrows is Brauerian"))
    }

    pub fn shifted_union(
        f: &BrauerArrow,
        h: &BrauerArrow,
        src_off: usize,
        tgt_off: usize,
    ) -> Result<BrauerArrow, Error> {
        if src_off != f.source {
            return Err(Error::SizeMismatch(src_off, f.source));
        }
        if tgt_off != f.target {
            return Err(Error::SizeMismatch(tgt_off, f.target));
        }
        Ok(Self::tensor(f, h))
    }

    /// Side-by-side juxtaposition: `h` shifted past `f`.
    pub fn tensor(f: &BrauerArrow, h: &BrauerArrow) -> BrauerArrow {
        let shift = |x: Node| match x.tag {
            Tag::Source => Node::s(x.index + f.source),
            Tag::Target => Node::t(x.index + f.target),
        };
        let mut pairs = f.pairs.clone();
        pairs.extend(h.pairs.iter().map(|&(x, y)| (shift(x), shift(y))));
        pairs.sort();
        BrauerArrow { source: f.source + h.source, target: f.target + h.target, pairs }
    }

    /// Pairs whose nodes are a source and a target.
    pub fn transversals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().filter(|(x, y)| x.tag != y.tag).map(|(x, y)| (x.index, y.index))
    }

    pub fn cups(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().filter(|(x, y)| x.tag == Tag::Source && y.tag == Tag::Source).map(|(x, y)| (x.index, y.index))
    }

    pub fn caps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().filter(|(x, y)| x.tag == Tag::Target && y.tag == Tag::Target).map(|(x, y)| (x.index, y.index))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<BrauerArrow, Error> {
        serde_json::from_str(s).map_err(|e| Error::Syntax { pos: e.column(), msg: e.to_string() })
    }
}

/// The worked composition `P * R` with `R : 3 ⊢ 9` and `P : 9 ⊢ 1`; returns `(P, R)`.
pub fn worked_example() -> (BrauerArrow, BrauerArrow) {
    let mut rp = vec![(Node::s(0), Node::t(0)), (Node::s(1), Node::t(3)), (Node::s(2), Node::t(6))];
    for n in [1, 4, 7] {
        rp.push((Node::t(n), Node::t(n + 1)));
    }
    let mut pp = vec![(Node::s(2), Node::t(0))];
    for n in [0, 3, 5, 7] {
        pp.push((Node::s(n), Node::s(n + 1)));
    }
    let r = BrauerArrow::from_pairs(3, 9, rp).expect("matching");
    let p = BrauerArrow::from_pairs(9, 1, pp).expect("matching");
    (p, r)
}

#[derive(Serialize, Deserialize)]
struct Wire {
    source: usize,
    target: usize,
    pairs: Vec<[String; 2]>,
}

impl Serialize for BrauerArrow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            source: self.source,
            target: self.target,
            pairs: self.pairs.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerArrow {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = Wire::deserialize(d)?;
        let mut pairs = Vec::with_capacity(w.pairs.len());
        for [a, b] in &w.pairs {
            let x = Node::parse(a).ok_or_else(|| D::Error::custom(format!("bad node {a}")))?;
            let y = Node::parse(b).ok_or_else(|| D::Error::custom(format!("bad node {b}")))?;
            pairs.push((x, y));
        }
        BrauerArrow::from_pairs(w.source, w.target, pairs).map_err(D::Error::custom)
    }
}

impl fmt::Display for BrauerArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}
