//! Formulae, occurrence paths, one-hole contexts and niceness.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Binary connective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conn {
    Conj,
    Disj,
}

impl Conn {
    pub fn dual(self) -> Conn {
        match self {
            Conn::Conj => Conn::Disj,
            Conn::Disj => Conn::Conj,
        }
    }

    /// The unit of the connective (top for conjunction, bot for disjunction).
    pub fn unit(self) -> Formula {
        match self {
            Conn::Conj => Formula::Top,
            Conn::Disj => Formula::Bot,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Conn::Conj => "&",
            Conn::Disj => "|",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Letter(Arc<str>),
    Top,
    Bot,
    Neg(Arc<Formula>),
    Conj(Arc<Formula>, Arc<Formula>),
    Disj(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn letter(name: &str) -> Formula {
        assert!(!name.is_empty(), "letter names are nonempty");
        Formula::Letter(Arc::from(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Arc::new(a))
    }

    pub fn conj(a: Formula, b: Formula) -> Formula {
        Formula::Conj(Arc::new(a), Arc::new(b))
    }

    pub fn disj(a: Formula, b: Formula) -> Formula {
        Formula::Disj(Arc::new(a), Arc::new(b))
    }

    pub fn bin(conn: Conn, a: Formula, b: Formula) -> Formula {
        match conn {
            Conn::Conj => Formula::conj(a, b),
            Conn::Disj => Formula::disj(a, b),
        }
    }

    /// Splits a binary formula into connective and children.
    pub fn as_bin(&self) -> Option<(Conn, &Formula, &Formula)> {
        match self {
            Formula::Conj(a, b) => Some((Conn::Conj, a, b)),
            Formula::Disj(a, b) => Some((Conn::Disj, a, b)),
            _ => None,
        }
    }

    /// Children of a formula with the given main connective.
    pub fn split(&self, conn: Conn) -> Option<(&Formula, &Formula)> {
        match (conn, self) {
            (Conn::Conj, Formula::Conj(a, b)) | (Conn::Disj, Formula::Disj(a, b)) => Some((a, b)),
            _ => None,
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Letter(_) | Formula::Top | Formula::Bot)
    }

    pub fn letter_count(&self) -> usize {
        match self {
            Formula::Letter(_) => 1,
            Formula::Top | Formula::Bot => 0,
            Formula::Neg(a) => a.letter_count(),
            Formula::Conj(a, b) | Formula::Disj(a, b) => a.letter_count() + b.letter_count(),
        }
    }

    /// Number of occurrences of conjunction, disjunction and negation.
    pub fn degree(&self) -> usize {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bot => 0,
            Formula::Neg(a) => 1 + a.degree(),
            Formula::Conj(a, b) | Formula::Disj(a, b) => 1 + a.degree() + b.degree(),
        }
    }

    /// Neither top nor bot occurs.
    pub fn is_constant_free(&self) -> bool {
        match self {
            Formula::Letter(_) => true,
            Formula::Top | Formula::Bot => false,
            Formula::Neg(a) => a.is_constant_free(),
            Formula::Conj(a, b) | Formula::Disj(a, b) => a.is_constant_free() && b.is_constant_free(),
        }
    }

    /// Built from letters with conjunction and disjunction only.
    pub fn is_conj_disj(&self) -> bool {
        match self {
            Formula::Letter(_) => true,
            Formula::Top | Formula::Bot | Formula::Neg(_) => false,
            Formula::Conj(a, b) | Formula::Disj(a, b) => a.is_conj_disj() && b.is_conj_disj(),
        }
    }

    pub fn is_literate(&self) -> bool {
        self.letter_count() > 0
    }

    pub fn letters(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<Arc<str>>) {
        match self {
            Formula::Letter(n) => out.push(n.clone()),
            Formula::Top | Formula::Bot => {}
            Formula::Neg(a) => a.collect_letters(out),
            Formula::Conj(a, b) | Formula::Disj(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    pub fn at(&self, path: &Path) -> Option<&Formula> {
        let mut cur = self;
        for step in path.steps() {
            cur = match (step, cur) {
                (Step::Left, Formula::Conj(a, _) | Formula::Disj(a, _)) => a,
                (Step::Right, Formula::Conj(_, b) | Formula::Disj(_, b)) => b,
                (Step::Neg, Formula::Neg(a)) => a,
                _ => return None,
            };
        }
        Some(cur)
    }

    /// Replaces the occurrence at `path` by `with`.
    pub fn replace_at(&self, path: &Path, with: Formula) -> Option<Formula> {
        replace_steps(self, path.steps(), with)
    }

    pub fn superficial(&self, conn: Conn) -> Vec<Path> {
        let mut out = Vec::new();
        superficial_into(self, conn, &mut Path::root(), &mut out);
        out
    }

    pub fn is_nice(&self, conn: Conn) -> bool {
        if *self == conn.unit() || self.is_constant_free() {
            return true;
        }
        match self.split(conn) {
            Some((a, b)) => a.is_nice(conn) && b.is_nice(conn),
            None => false,
        }
    }
}

fn replace_steps(f: &Formula, steps: &[Step], with: Formula) -> Option<Formula> {
    let Some((first, rest)) = steps.split_first() else {
        return Some(with);
    };
    Some(match (first, f) {
        (Step::Left, Formula::Conj(a, b)) => Formula::Conj(Arc::new(replace_steps(a, rest, with)?), b.clone()),
        (Step::Left, Formula::Disj(a, b)) => Formula::Disj(Arc::new(replace_steps(a, rest, with)?), b.clone()),
        (Step::Right, Formula::Conj(a, b)) => Formula::Conj(a.clone(), Arc::new(replace_steps(b, rest, with)?)),
        (Step::Right, Formula::Disj(a, b)) => Formula::Disj(a.clone(), Arc::new(replace_steps(b, rest, with)?)),
        (Step::Neg, Formula::Neg(a)) => Formula::Neg(Arc::new(replace_steps(a, rest, with)?)),
        _ => return None,
    })
}

fn superficial_into(f: &Formula, conn: Conn, here: &mut Path, out: &mut Vec<Path>) {
    if let Some((a, b)) = f.split(conn) {
        here.0.push(Step::Left);
        superficial_into(a, conn, here, out);
        here.0.pop();
        here.0.push(Step::Right);
        superficial_into(b, conn, here, out);
        here.0.pop();
    } else if *f != conn.unit() {
        out.push(here.clone());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Left,
    Right,
    Neg,
}

/// Address of a subformula occurrence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<Step>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn new(steps: Vec<Step>) -> Path {
        Path(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, step: Step) -> Path {
        let mut v = self.0.clone();
        v.push(step);
        Path(v)
    }

    pub fn join(&self, other: &Path) -> Path {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Path(v)
    }

    pub fn prepend(&self, step: Step) -> Path {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(step);
        v.extend_from_slice(&self.0);
        Path(v)
    }

    /// The remainder of `self` after `prefix`, if `prefix` is a prefix.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|r| Path(r.to_vec()))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, ".");
        }
        for s in &self.0 {
            let c = match s {
                Step::Left => 'L',
                Step::Right => 'R',
                Step::Neg => 'N',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Shape {
    Hole,
    WithRight(Box<Shape>, Formula),
    WithLeft(Formula, Box<Shape>),
}

/// One-hole context whose spine uses a single connective.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    conn: Conn,
    shape: Shape,
}

impl Context {
    pub fn hole(conn: Conn) -> Context {
        Context { conn, shape: Shape::Hole }
    }

    /// `inner ξ side`
    pub fn with_right(inner: Context, side: Formula) -> Context {
        Context { conn: inner.conn, shape: Shape::WithRight(Box::new(inner.shape), side) }
    }

    /// `side ξ inner`
    pub fn with_left(side: Formula, inner: Context) -> Context {
        Context { conn: inner.conn, shape: Shape::WithLeft(side, Box::new(inner.shape)) }
    }

    pub fn conn(&self) -> Conn {
        self.conn
    }

    pub fn is_proper(&self) -> bool {
        self.shape != Shape::Hole
    }

    /// Outermost layer: `(inner, side, hole_on_left)`.
    pub fn outer(&self) -> Option<(Context, &Formula, bool)> {
        match &self.shape {
            Shape::Hole => None,
            Shape::WithRight(z, a) => Some((Context { conn: self.conn, shape: (**z).clone() }, a, true)),
            Shape::WithLeft(a, z) => Some((Context { conn: self.conn, shape: (**z).clone() }, a, false)),
        }
    }

    /// Decomposes `f` at `path`, requiring every node above the hole to use `conn`.
    pub fn at(f: &Formula, path: &Path, conn: Conn) -> Result<(Context, Formula), Error> {
        fn go(f: &Formula, steps: &[Step], conn: Conn) -> Option<(Shape, Formula)> {
            let Some((first, rest)) = steps.split_first() else {
                return Some((Shape::Hole, f.clone()));
            };
            let (a, b) = f.split(conn)?;
            match first {
                Step::Left => {
                    let (s, x) = go(a, rest, conn)?;
                    Some((Shape::WithRight(Box::new(s), b.clone()), x))
                }
                Step::Right => {
                    let (s, x) = go(b, rest, conn)?;
                    Some((Shape::WithLeft(a.clone(), Box::new(s)), x))
                }
                Step::Neg => None,
            }
        }
        go(f, path.steps(), conn)
            .map(|(shape, x)| (Context { conn, shape }, x))
            .ok_or_else(|| Error::BadPath { formula: f.to_string(), path: path.to_string() })
    }

    pub fn apply(&self, a: &Formula) -> Formula {
        fn go(s: &Shape, conn: Conn, a: &Formula) -> Formula {
            match s {
                Shape::Hole => a.clone(),
                Shape::WithRight(z, b) => Formula::bin(conn, go(z, conn, a), b.clone()),
                Shape::WithLeft(b, z) => Formula::bin(conn, b.clone(), go(z, conn, a)),
            }
        }
        go(&self.shape, self.conn, a)
    }

    pub fn hole_path(&self) -> Path {
        let mut steps = Vec::new();
        let mut s = &self.shape;
        loop {
            match s {
                Shape::Hole => return Path(steps),
                Shape::WithRight(z, _) => {
                    steps.push(Step::Left);
                    s = z;
                }
                Shape::WithLeft(_, z) => {
                    steps.push(Step::Right);
                    s = z;
                }
            }
        }
    }

    /// `self(inner(_))`
    pub fn compose(&self, inner: &Context) -> Context {
        assert_eq!(self.conn, inner.conn, "contexts of different polarity");
        fn go(s: &Shape, inner: &Shape) -> Shape {
            match s {
                Shape::Hole => inner.clone(),
                Shape::WithRight(z, b) => Shape::WithRight(Box::new(go(z, inner)), b.clone()),
                Shape::WithLeft(b, z) => Shape::WithLeft(b.clone(), Box::new(go(z, inner))),
            }
        }
        Context { conn: self.conn, shape: go(&self.shape, &inner.shape) }
    }

    /// The formula left when the hole is deleted: E_X for conjunctive and D_Y for disjunctive contexts.
    pub fn frame(&self) -> Result<Formula, Error> {
        fn go(s: &Shape, conn: Conn) -> Formula {
            match s {
                Shape::Hole => unreachable!(),
                Shape::WithRight(z, b) if **z == Shape::Hole => b.clone(),
                Shape::WithLeft(b, z) if **z == Shape::Hole => b.clone(),
                Shape::WithRight(z, b) => Formula::bin(conn, go(z, conn), b.clone()),
                Shape::WithLeft(b, z) => Formula::bin(conn, b.clone(), go(z, conn)),
            }
        }
        if !self.is_proper() {
            return Err(Error::HoleFrame);
        }
        Ok(go(&self.shape, self.conn))
    }

    /// Side formulae from the outside in.
    pub fn sides(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        let mut s = &self.shape;
        loop {
            match s {
                Shape::Hole => return out,
                Shape::WithRight(z, b) | Shape::WithLeft(b, z) => {
                    out.push(b);
                    s = z;
                }
            }
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hole = Formula::letter("_");
        write!(f, "{}", self.apply(&hole))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Letter(n) => write!(f, "{n}"),
            Formula::Top => write!(f, "top"),
            Formula::Bot => write!(f, "bot"),
            Formula::Neg(a) => {
                if a.as_bin().is_some() {
                    write!(f, "~({a})")
                } else {
                    write!(f, "~{a}")
                }
            }
            Formula::Conj(a, b) => {
                if a.as_bin().is_some() {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                if matches!(**b, Formula::Disj(..)) {
                    write!(f, " & ({b})")
                } else {
                    write!(f, " & {b}")
                }
            }
            Formula::Disj(a, b) => {
                if matches!(**a, Formula::Disj(..)) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                write!(f, " | {b}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::letter("p")
    }
    fn q() -> Formula {
        Formula::letter("q")
    }
    fn r() -> Formula {
        Formula::letter("r")
    }

    #[test]
    fn letter_counts() {
        let f = Formula::disj(Formula::disj(q(), Formula::neg(r())), q());
        assert_eq!(f.letter_count(), 3);
        assert_eq!(Formula::disj(p(), q()).letter_count(), 2);
        assert_eq!(Formula::Top.letter_count(), 0);
    }

    #[test]
    fn superficial_lists() {
        let f = Formula::conj(Formula::disj(p(), q()), r());
        assert_eq!(f.superficial(Conn::Conj), vec![Path::new(vec![Step::Left]), Path::new(vec![Step::Right])]);
        let g = Formula::disj(Formula::conj(p(), r()), Formula::disj(q(), Formula::Bot));
        assert_eq!(
            g.superficial(Conn::Disj),
            vec![Path::new(vec![Step::Left]), Path::new(vec![Step::Right, Step::Left])]
        );
        assert!(Formula::Top.superficial(Conn::Conj).is_empty());
    }

    #[test]
    fn niceness() {
        assert!(Formula::Top.is_nice(Conn::Conj));
        assert!(Formula::conj(p(), Formula::Top).is_nice(Conn::Conj));
        assert!(!Formula::Bot.is_nice(Conn::Conj));
        assert!(!Formula::disj(p(), Formula::Top).is_nice(Conn::Conj));
        assert!(Formula::disj(p(), Formula::Bot).is_nice(Conn::Disj));
    }

    #[test]
    fn context_apply_and_frame() {
        let x = Context::with_right(Context::hole(Conn::Conj), r());
        assert_eq!(x.apply(&Formula::disj(p(), q())), Formula::conj(Formula::disj(p(), q()), r()));

        let (f, c, b) = (Formula::letter("f"), Formula::letter("c"), Formula::letter("b"));
        let inner = Context::with_right(Context::with_left(c.clone(), Context::hole(Conn::Conj)), b.clone());
        let x = Context::with_left(f.clone(), inner);
        assert_eq!(x.frame().unwrap(), Formula::conj(f, Formula::conj(c, b.clone())));

        let y = Context::with_left(b.clone(), Context::hole(Conn::Disj));
        assert_eq!(y.frame().unwrap(), b);
        assert!(Context::hole(Conn::Conj).frame().is_err());
    }

    #[test]
    fn context_at_roundtrip() {
        let f = Formula::conj(p(), Formula::conj(Formula::disj(q(), r()), p()));
        let path = Path::new(vec![Step::Right, Step::Left]);
        let (ctx, sub) = Context::at(&f, &path, Conn::Conj).unwrap();
        assert_eq!(sub, Formula::disj(q(), r()));
        assert_eq!(ctx.apply(&sub), f);
        assert_eq!(ctx.hole_path(), path);
        assert!(Context::at(&f, &Path::new(vec![Step::Right, Step::Left, Step::Left]), Conn::Conj).is_err());
    }

    #[test]
    fn printing_is_minimal() {
        let f = Formula::conj(p(), Formula::disj(q(), Formula::neg(r())));
        assert_eq!(f.to_string(), "p & (q | ~r)");
        let g = Formula::disj(Formula::conj(p(), q()), r());
        assert_eq!(g.to_string(), "p & q | r");
        let h = Formula::conj(Formula::conj(p(), q()), r());
        assert_eq!(h.to_string(), "(p & q) & r");
        assert_eq!(Formula::neg(Formula::conj(p(), q())).to_string(), "~(p & q)");
    }
}
