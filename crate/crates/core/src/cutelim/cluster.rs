//! Parameters, clusters and cut complexity.

use std::fmt;

use crate::error::Error;
use crate::formula::{Conn, Formula, Path, Step};
use crate::gentzen::{Net, NetNode};

use Step::{Left as L, Right as R};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Source,
    Target,
}

impl Side {
    pub fn conn(self) -> Conn {
        match self {
            Side::Source => Conn::Conj,
            Side::Target => Conn::Disj,
        }
    }
}

/// An occurrence in the sequent of a net.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Occurrence {
    pub side: Side,
    pub path: Path,
}

impl Occurrence {
    pub fn source(path: Path) -> Occurrence {
        Occurrence { side: Side::Source, path }
    }

    pub fn target(path: Path) -> Occurrence {
        Occurrence { side: Side::Target, path }
    }
}

/// Where a superficial occurrence of a net's sequent comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Upper {
    Leaf,
    /// Upper parameter in child `child`.
    Param {
        child: usize,
        at: Occurrence,
    },
}

fn p(steps: &[Step], rest: &[Step]) -> Path {
    let mut v = steps.to_vec();
    v.extend_from_slice(rest);
    Path::new(v)
}

fn not_superficial(n: &Net, occ: &Occurrence) -> Error {
    let f = side_formula(n, occ.side);
    Error::NotSuperficial(format!("{} in {f}", occ.path))
}

pub(crate) fn side_formula(n: &Net, side: Side) -> &Formula {
    match side {
        Side::Source => n.source(),
        Side::Target => n.target(),
    }
}

/// Checks that `occ` addresses a superficial occurrence of the net's sequent.
pub fn check_superficial(n: &Net, occ: &Occurrence) -> Result<(), Error> {
    let conn = occ.side.conn();
    let mut f = side_formula(n, occ.side);
    for step in occ.path.steps() {
        let (a, b) = match (step, f.split(conn)) {
            (L | R, Some(ab)) => ab,
            _ => return Err(not_superficial(n, occ)),
        };
        f = if *step == L { a } else { b };
    }
    if f.split(conn).is_some() || *f == conn.unit() {
        return Err(not_superficial(n, occ));
    }
    Ok(())
}

/// Position of an occurrence inside the rewritten part of a structural step.
fn remap_local(conclusion_left_assoc: Option<bool>, r: &[Step]) -> Option<Path> {
    match conclusion_left_assoc {
        None => match r.split_first()? {
            (L, rest) => Some(p(&[R], rest)),
            (R, rest) => Some(p(&[L], rest)),
            _ => None,
        },
        Some(true) => match r {
            [L, L, rest @ ..] => Some(p(&[L], rest)),
            [L, R, rest @ ..] => Some(p(&[R, L], rest)),
            [R, rest @ ..] => Some(p(&[R, R], rest)),
            _ => None,
        },
        Some(false) => match r {
            [L, rest @ ..] => Some(p(&[L, L], rest)),
            [R, L, rest @ ..] => Some(p(&[L, R], rest)),
            [R, R, rest @ ..] => Some(p(&[R], rest)),
            _ => None,
        },
    }
}

/// The leaf or upper parameter behind a superficial occurrence.
pub fn upper(n: &Net, occ: &Occurrence) -> Result<Upper, Error> {
    check_superficial(n, occ)?;
    let steps = occ.path.steps();
    let param = |child: usize, side: Side, path: Path| Ok(Upper::Param { child, at: Occurrence { side, path } });
    let same = |child: usize| param(child, occ.side, occ.path.clone());
    let bad = || Err(not_superficial(n, occ));
    match (n.node(), occ.side) {
        (NetNode::Ax(a), side) => match (a, side) {
            (Formula::Letter(_), _) | (Formula::Top, Side::Target) | (Formula::Bot, Side::Source) => Ok(Upper::Leaf),
            _ => bad(),
        },
        (NetNode::AssocHat { conn, dir, ctx, .. }, side) if side.conn() == *conn => {
            let h = ctx.hole_path();
            let left_assoc =
                matches!((conn, dir), (Conn::Conj, crate::arrows::Dir::Bwd) | (Conn::Disj, crate::arrows::Dir::Fwd));
            hat_param(n, occ, &h, Some(left_assoc))
        }
        (NetNode::SymHat { conn, ctx, .. }, side) if side.conn() == *conn => hat_param(n, occ, &ctx.hole_path(), None),
        (NetNode::AssocHat { .. } | NetNode::SymHat { .. }, _) => same(0),
        (NetNode::TopFwd(_), Side::Source) => match steps {
            [R, rest @ ..] => param(0, Side::Source, Path::new(rest.to_vec())),
            _ => bad(),
        },
        (NetNode::TopBwd(_), Side::Source) => param(0, Side::Source, occ.path.prepend(R)),
        (NetNode::BotBwd(_), Side::Target) => match steps {
            [L, rest @ ..] => param(0, Side::Target, Path::new(rest.to_vec())),
            _ => bad(),
        },
        (NetNode::BotFwd(_), Side::Target) => param(0, Side::Target, occ.path.prepend(L)),
        (NetNode::TopFwd(_) | NetNode::TopBwd(_) | NetNode::BotBwd(_) | NetNode::BotFwd(_), _) => same(0),
        (NetNode::ConjRule(..), Side::Source) => match steps {
            [L, rest @ ..] => param(0, Side::Source, Path::new(rest.to_vec())),
            [R, rest @ ..] => param(1, Side::Source, Path::new(rest.to_vec())),
            _ => bad(),
        },
        (NetNode::ConjRule(..), Side::Target) => match steps {
            [L] => Ok(Upper::Leaf),
            [R, L, rest @ ..] => param(0, Side::Target, p(&[R], rest)),
            [R, R, rest @ ..] => param(1, Side::Target, p(&[R], rest)),
            _ => bad(),
        },
        (NetNode::DisjRule(..), Side::Source) => match steps {
            [R] => Ok(Upper::Leaf),
            [L, L, rest @ ..] => param(0, Side::Source, p(&[L], rest)),
            [L, R, rest @ ..] => param(1, Side::Source, p(&[L], rest)),
            _ => bad(),
        },
        (NetNode::DisjRule(..), Side::Target) => match steps {
            [L, rest @ ..] => param(0, Side::Target, Path::new(rest.to_vec())),
            [R, rest @ ..] => param(1, Side::Target, Path::new(rest.to_vec())),
            _ => bad(),
        },
        (NetNode::NegL(_), Side::Source) => match steps {
            [R] => Ok(Upper::Leaf),
            [L, rest @ ..] => param(0, Side::Source, Path::new(rest.to_vec())),
            _ => bad(),
        },
        (NetNode::NegL(_), Side::Target) => param(0, Side::Target, occ.path.prepend(R)),
        (NetNode::NegR(_), Side::Source) => param(0, Side::Source, occ.path.prepend(L)),
        (NetNode::NegR(_), Side::Target) => match steps {
            [L] => Ok(Upper::Leaf),
            [R, rest @ ..] => param(0, Side::Target, Path::new(rest.to_vec())),
            _ => bad(),
        },
        (NetNode::Cut { x, .. }, Side::Source) => {
            let hx = x.hole_path();
            match occ.path.strip_prefix(&hx) {
                Some(r) => param(1, Side::Source, r),
                None => same(0),
            }
        }
        (NetNode::Cut { y, .. }, Side::Target) => {
            let hy = y.hole_path();
            match occ.path.strip_prefix(&hy) {
                Some(r) => param(0, Side::Target, r),
                None => same(1),
            }
        }
    }
}

fn hat_param(n: &Net, occ: &Occurrence, hole: &Path, left_assoc: Option<bool>) -> Result<Upper, Error> {
    let path = match occ.path.strip_prefix(hole) {
        Some(r) => hole.join(&remap_local(left_assoc, r.steps()).ok_or_else(|| not_superficial(n, occ))?),
        None => occ.path.clone(),
    };
    Ok(Upper::Param { child: 0, at: Occurrence { side: occ.side, path } })
}

/// Number of occurrences in the cluster of `occ`.
pub fn cluster_length(n: &Net, occ: &Occurrence) -> Result<usize, Error> {
    let mut len = 1;
    let mut net = n;
    let mut occ = occ.clone();
    loop {
        match upper(net, &occ)? {
            Upper::Leaf => return Ok(len),
            Upper::Param { child, at } => {
                net = net.children()[child].as_ref();
                occ = at;
                len += 1;
            }
        }
    }
}

/// Degree, then rank; ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Complexity {
    pub degree: usize,
    pub rank: usize,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.degree, self.rank)
    }
}

/// Cluster lengths of the two displayed cut-formula occurrences, when the rank needs them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Clusters {
    pub s: Option<usize>,
    pub t: Option<usize>,
}

pub(crate) fn clusters(a: &Formula, hx: &Path, hy: &Path, f: &Net, g: &Net) -> Result<Clusters, Error> {
    let need_s = !matches!(a, Formula::Top | Formula::Conj(..));
    let need_t = !matches!(a, Formula::Bot | Formula::Disj(..));
    let s = if need_s { Some(cluster_length(f, &Occurrence::source(hx.clone()))?) } else { None };
    let t = if need_t { Some(cluster_length(g, &Occurrence::target(hy.clone()))?) } else { None };
    Ok(Clusters { s, t })
}

pub(crate) fn rank(a: &Formula, c: Clusters) -> usize {
    let (s, t) = (c.s.unwrap_or(0), c.t.unwrap_or(0));
    match a {
        Formula::Letter(_) => s.min(t) - 1,
        Formula::Neg(_) => s + t - 2,
        Formula::Top | Formula::Conj(..) => t - 1,
        Formula::Bot | Formula::Disj(..) => s - 1,
    }
}

pub fn is_cut_free(n: &Net) -> bool {
    n.is_cut_free()
}

/// Complexity of a topmost cut.
pub fn cut_complexity(n: &Net) -> Result<Complexity, Error> {
    let NetNode::Cut { x, y, formula, f, g } = n.node() else {
        return Err(Error::NotTopmost);
    };
    if !f.is_cut_free() || !g.is_cut_free() {
        return Err(Error::NotTopmost);
    }
    let c = clusters(formula, &x.hole_path(), &y.hole_path(), f, g)?;
    Ok(Complexity { degree: formula.degree(), rank: rank(formula, c) })
}
