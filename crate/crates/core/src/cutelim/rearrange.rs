//! Reassociating and permuting one side of a net's sequent with structural steps.

use crate::arrows::Dir;
use crate::error::Error;
use crate::formula::{Conn, Context, Formula, Path, Step};
use crate::gentzen::Net;

/// Binary tree over opaque blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

pub(crate) fn node(a: Tree, b: Tree) -> Tree {
    Tree::Node(Box::new(a), Box::new(b))
}

/// Context skeleton with its side formulae turned into blocks.
#[derive(Clone, Debug)]
pub(crate) enum Skel {
    Hole,
    HoleLeft(Box<Skel>, usize),
    HoleRight(usize, Box<Skel>),
}

impl Skel {
    pub(crate) fn fill(&self, t: Tree) -> Tree {
        match self {
            Skel::Hole => t,
            Skel::HoleLeft(inner, side) => node(inner.fill(t), Tree::Leaf(*side)),
            Skel::HoleRight(side, inner) => node(Tree::Leaf(*side), inner.fill(t)),
        }
    }
}

pub(crate) struct Blocks {
    conn: Conn,
    forms: Vec<Formula>,
}

impl Blocks {
    pub(crate) fn new(conn: Conn) -> Blocks {
        Blocks { conn, forms: Vec::new() }
    }

    pub(crate) fn leaf(&mut self, f: &Formula) -> Tree {
        self.forms.push(f.clone());
        Tree::Leaf(self.forms.len() - 1)
    }

    pub(crate) fn skel(&mut self, z: &Context) -> Skel {
        match z.outer() {
            None => Skel::Hole,
            Some((inner, side, true)) => {
                let id = self.leaf_id(side);
                Skel::HoleLeft(Box::new(self.skel(&inner)), id)
            }
            Some((inner, side, false)) => {
                let id = self.leaf_id(side);
                Skel::HoleRight(id, Box::new(self.skel(&inner)))
            }
        }
    }

    fn leaf_id(&mut self, f: &Formula) -> usize {
        self.forms.push(f.clone());
        self.forms.len() - 1
    }

    pub(crate) fn formula(&self, t: &Tree) -> Formula {
        match t {
            Tree::Leaf(i) => self.forms[*i].clone(),
            Tree::Node(a, b) => Formula::bin(self.conn, self.formula(a), self.formula(b)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    /// `a(bc)` to `(ab)c`
    AssocLeft,
    /// `(ab)c` to `a(bc)`
    AssocRight,
    Swap,
}

impl Move {
    fn inverse(self) -> Move {
        match self {
            Move::AssocLeft => Move::AssocRight,
            Move::AssocRight => Move::AssocLeft,
            Move::Swap => Move::Swap,
        }
    }
}

fn at_mut<'a>(t: &'a mut Tree, path: &[Step]) -> &'a mut Tree {
    match path.split_first() {
        None => t,
        Some((s, rest)) => match t {
            Tree::Node(a, b) => at_mut(if *s == Step::Left { a } else { b }, rest),
            Tree::Leaf(_) => unreachable!("path runs past a block"),
        },
    }
}

fn apply(t: &mut Tree, path: &[Step], m: Move) {
    let slot = at_mut(t, path);
    let old = std::mem::replace(slot, Tree::Leaf(usize::MAX));
    *slot = match (m, old) {
        (Move::Swap, Tree::Node(a, b)) => Tree::Node(b, a),
        (Move::AssocLeft, Tree::Node(a, bc)) => match *bc {
            Tree::Node(b, c) => node(node(*a, *b), *c),
            _ => unreachable!("assoc on a block"),
        },
        (Move::AssocRight, Tree::Node(ab, c)) => match *ab {
            Tree::Node(a, b) => node(*a, node(*b, *c)),
            _ => unreachable!("assoc on a block"),
        },
        _ => unreachable!("move on a block"),
    };
}

struct Recorder {
    tree: Tree,
    moves: Vec<(Vec<Step>, Move)>,
}

impl Recorder {
    fn push(&mut self, path: &[Step], m: Move) {
        apply(&mut self.tree, path, m);
        if let Some((p, last)) = self.moves.last() {
            if p == path && *last == m.inverse() {
                self.moves.pop();
                return;
            }
        }
        self.moves.push((path.to_vec(), m));
    }

    fn get(&mut self, path: &[Step]) -> &mut Tree {
        at_mut(&mut self.tree, path)
    }
}

fn first_leaf(t: &Tree) -> usize {
    match t {
        Tree::Leaf(i) => *i,
        Tree::Node(a, _) => first_leaf(a),
    }
}

/// Moves turning `t` into the right comb with blocks in increasing order.
fn normalize(t: &Tree) -> Vec<(Vec<Step>, Move)> {
    let mut r = Recorder { tree: t.clone(), moves: Vec::new() };
    let mut spine = Vec::new();
    loop {
        while let Tree::Node(a, _) = r.get(&spine) {
            if matches!(**a, Tree::Node(..)) {
                r.push(&spine.clone(), Move::AssocRight);
            } else {
                break;
            }
        }
        match r.get(&spine) {
            Tree::Node(..) => spine.push(Step::Right),
            Tree::Leaf(_) => break,
        }
    }
    let n = spine.len() + 1;
    // bubble sort on the comb
    for pass in 0..n {
        for i in 0..n - 1 - pass {
            let here = vec![Step::Right; i];
            let (x, y, last) = match r.get(&here) {
                Tree::Node(a, rest) => match &**rest {
                    Tree::Node(b, _) => (first_leaf(a), first_leaf(b), false),
                    Tree::Leaf(b) => (first_leaf(a), *b, true),
                },
                Tree::Leaf(_) => unreachable!("comb too short"),
            };
            if x > y {
                if last {
                    r.push(&here, Move::Swap);
                } else {
                    r.push(&here, Move::AssocLeft);
                    let mut l = here.clone();
                    l.push(Step::Left);
                    r.push(&l, Move::Swap);
                    r.push(&here, Move::AssocRight);
                }
            }
        }
    }
    r.moves
}

fn plan(from: &Tree, to: &Tree) -> Vec<(Vec<Step>, Move)> {
    let mut r = Recorder { tree: from.clone(), moves: Vec::new() };
    for (p, m) in normalize(from) {
        r.push(&p, m);
    }
    for (p, m) in normalize(to).into_iter().rev() {
        r.push(&p, m.inverse());
    }
    debug_assert_eq!(&r.tree, to);
    r.moves
}

/// Rebuilds the source (for `∧`) or target (for `∨`) of `n` from shape `from` to shape `to`.
pub(crate) fn rearrange(n: Net, blocks: &Blocks, from: &Tree, to: &Tree) -> Result<Net, Error> {
    let conn = blocks.conn;
    let current = if conn == Conn::Conj { n.source() } else { n.target() };
    let expect = blocks.formula(from);
    if *current != expect {
        return Err(Error::Elimination { rule: "rearrange", msg: format!("expected {expect}, found {current}") });
    }
    let mut net = n;
    for (p, m) in plan(from, to) {
        let path = Path::new(p);
        net = match (conn, m) {
            (_, Move::Swap) => Net::sym_hat_at(conn, &path, net)?,
            (Conn::Conj, Move::AssocLeft) | (Conn::Disj, Move::AssocRight) => {
                Net::assoc_hat_at(conn, Dir::Bwd, &path, net)?
            }
            (Conn::Conj, Move::AssocRight) | (Conn::Disj, Move::AssocLeft) => {
                Net::assoc_hat_at(conn, Dir::Fwd, &path, net)?
            }
        };
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gentzen::{denote, identity_net};
    use crate::graph::graph_of;
    use crate::syntax::parse_formula;

    fn leaves(t: &Tree, out: &mut Vec<usize>) {
        match t {
            Tree::Leaf(i) => out.push(*i),
            Tree::Node(a, b) => {
                leaves(a, out);
                leaves(b, out);
            }
        }
    }

    #[test]
    fn plans_reach_the_goal() {
        let l = Tree::Leaf;
        let cases = vec![
            (node(l(0), node(l(1), l(2))), node(node(l(1), l(0)), l(2))),
            (node(node(l(3), l(1)), node(l(0), l(2))), node(l(2), node(node(l(0), l(3)), l(1)))),
            (l(0), l(0)),
        ];
        for (a, b) in cases {
            let mut t = a.clone();
            for (p, m) in plan(&a, &b) {
                apply(&mut t, &p, m);
            }
            assert_eq!(t, b);
            let mut v = Vec::new();
            leaves(&t, &mut v);
            v.sort();
            let mut w = Vec::new();
            leaves(&a, &mut w);
            w.sort();
            assert_eq!(v, w);
        }
    }

    #[test]
    fn rearranges_target_inside_context() {
        // target Y(c) ∨ ⊥  to  Y(c ∨ ⊥) for Y = q ∨ _
        let y = Context::with_left(parse_formula("q").unwrap(), Context::hole(Conn::Disj));
        let f = parse_formula("(q | c) | bot").unwrap();
        let n = Net::bot_bwd(identity_net(&parse_formula("q | c").unwrap()));
        let mut b = Blocks::new(Conn::Disj);
        let sk = b.skel(&y);
        let c = b.leaf(&parse_formula("c").unwrap());
        let bot = b.leaf(&Formula::Bot);
        let from = node(sk.fill(c.clone()), bot.clone());
        assert_eq!(b.formula(&from), f);
        let to = sk.fill(node(c, bot));
        let out = rearrange(n.clone(), &b, &from, &to).unwrap();
        assert_eq!(out.target(), &parse_formula("q | (c | bot)").unwrap());
        assert_eq!(graph_of(&denote(&out)).unwrap(), graph_of(&denote(&n)).unwrap());
    }
}
