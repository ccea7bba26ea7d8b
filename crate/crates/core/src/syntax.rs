//! Text syntax for formulae, contexts, arrow terms, schema patterns and nets.
//!
//! Formulae: letters `[a-z][a-zA-Z0-9_]*`, `top`, `bot`, `~`, `&`, `|`;
//! `~` binds tightest, then `&`, then `|`; binaries associate to the right.
//! Terms: named constructors, `f . g` for f after g.
//! Contexts: formula text with one `_` hole.

use crate::arrows::{derived, ArrowTerm, Dir, Pattern};
use crate::error::Error;
use crate::formula::{Conn, Context, Formula, Path};
use crate::gentzen::{identity_net, tens_net, Net};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Amp,
    Bar,
    Tilde,
    Dot,
    Turnstile,
    Colon,
    Eof,
}

struct Lexer;

impl Lexer {
    fn lex(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
        let bytes = text.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            let tok = match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    i += 1;
                    continue;
                }
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b',' => Tok::Comma,
                b'&' => Tok::Amp,
                b'~' => Tok::Tilde,
                b'.' => Tok::Dot,
                b':' => Tok::Colon,
                b'|' => {
                    if bytes.get(i + 1) == Some(&b'-') {
                        i += 1;
                        Tok::Turnstile
                    } else {
                        Tok::Bar
                    }
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                        i += 1;
                    }
                    out.push((Tok::Ident(text[start..i].to_string()), start));
                    continue;
                }
                _ => {
                    let ch = text[i..].chars().next().unwrap_or('?');
                    return Err(Error::Syntax { pos: i, msg: format!("unexpected character {ch:?}") });
                }
            };
            i += 1;
            out.push((tok, start));
        }
        out.push((Tok::Eof, text.len()));
        Ok(out)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Plain,
    /// Uppercase letters are formula metavariables; bare identifiers are arrow variables.
    Pattern,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    mode: Mode,
    hole_ok: bool,
}

const HOLE: &str = "_";

#[derive(Clone, Copy)]
enum Arg {
    F,
    T,
    X,
    Y,
    N,
}

enum Val {
    F(Formula),
    T(Pattern),
    C(Context),
    N(Net),
}

impl Parser {
    fn new(text: &str, mode: Mode) -> Result<Parser, Error> {
        Ok(Parser { toks: Lexer::lex(text)?, at: 0, mode, hole_ok: false })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), Error> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn finish(&mut self) -> Result<(), Error> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn formula(&mut self) -> Result<Formula, Error> {
        let left = self.conj()?;
        if *self.peek() == Tok::Bar {
            self.bump();
            let right = self.formula()?;
            return Ok(Formula::disj(left, right));
        }
        Ok(left)
    }

    fn conj(&mut self) -> Result<Formula, Error> {
        let left = self.unary()?;
        if *self.peek() == Tok::Amp {
            self.bump();
            let right = self.conj()?;
            return Ok(Formula::conj(left, right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, Error> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Tok::Ident(name) => {
                let ok = match name.as_str() {
                    "top" => {
                        self.bump();
                        return Ok(Formula::Top);
                    }
                    "bot" => {
                        self.bump();
                        return Ok(Formula::Bot);
                    }
                    HOLE => self.hole_ok,
                    _ => {
                        let first = name.as_bytes()[0];
                        first.is_ascii_lowercase() || (self.mode == Mode::Pattern && first.is_ascii_uppercase())
                    }
                };
                if !ok {
                    return self.err(format!("{name:?} is not a letter"));
                }
                self.bump();
                Ok(Formula::letter(&name))
            }
            _ => self.err("expected a formula"),
        }
    }

    fn context(&mut self, conn: Conn) -> Result<Context, Error> {
        let pos = self.pos();
        self.hole_ok = true;
        let f = self.formula();
        self.hole_ok = false;
        let f = f?;
        let hole = Formula::letter(HOLE);
        let mut holes = Vec::new();
        find_all(&f, &hole, &mut Path::root(), &mut holes);
        if holes.len() != 1 {
            return Err(Error::Syntax { pos, msg: format!("a context needs exactly one hole, found {}", holes.len()) });
        }
        let (ctx, _) = Context::at(&f, &holes[0], conn).map_err(|_| Error::Syntax {
            pos,
            msg: format!("the hole of a {} context must sit under {} only", conn_word(conn), conn.symbol()),
        })?;
        Ok(ctx)
    }

    fn term(&mut self) -> Result<Pattern, Error> {
        let left = self.app()?;
        if *self.peek() == Tok::Dot {
            self.bump();
            let right = self.term()?;
            return Ok(Pattern::Comp(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn app(&mut self) -> Result<Pattern, Error> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let t = self.term()?;
            self.expect(Tok::RParen, "')'")?;
            return Ok(t);
        }
        let pos = self.pos();
        let Tok::Ident(name) = self.bump() else {
            return Err(Error::Syntax { pos, msg: "expected a term".into() });
        };
        if *self.peek() != Tok::LParen {
            if self.mode == Mode::Pattern {
                return Ok(Pattern::Var(name));
            }
            return Err(Error::Syntax { pos, msg: format!("expected '(' after {name}") });
        }
        let Some(sig) = term_signature(&name) else {
            return Err(Error::Syntax { pos, msg: format!("unknown constructor {name:?}") });
        };
        let args = self.args(sig)?;
        build_term(&name, args).map_err(|e| relocate(e, pos))
    }

    fn args(&mut self, sig: &[Arg]) -> Result<Vec<Val>, Error> {
        self.expect(Tok::LParen, "'('")?;
        let mut out = Vec::with_capacity(sig.len());
        for (i, kind) in sig.iter().enumerate() {
            if i > 0 {
                self.expect(Tok::Comma, "','")?;
            }
            out.push(match kind {
                Arg::F => Val::F(self.formula()?),
                Arg::T => Val::T(self.term()?),
                Arg::X => Val::C(self.context(Conn::Conj)?),
                Arg::Y => Val::C(self.context(Conn::Disj)?),
                Arg::N => Val::N(self.net()?),
            });
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(out)
    }

    fn net(&mut self) -> Result<Net, Error> {
        let pos = self.pos();
        let Tok::Ident(name) = self.bump() else {
            return Err(Error::Syntax { pos, msg: "expected a net".into() });
        };
        let Some(sig) = net_signature(&name) else {
            return Err(Error::Syntax { pos, msg: format!("unknown net constructor {name:?}") });
        };
        let args = self.args(sig)?;
        build_net(&name, args)
    }
}

fn relocate(e: Error, pos: usize) -> Error {
    match e {
        Error::Syntax { msg, .. } => Error::Syntax { pos, msg },
        other => other,
    }
}

fn conn_word(c: Conn) -> &'static str {
    match c {
        Conn::Conj => "conjunctive",
        Conn::Disj => "disjunctive",
    }
}

fn find_all(f: &Formula, target: &Formula, here: &mut Path, out: &mut Vec<Path>) {
    if f == target {
        out.push(here.clone());
        return;
    }
    use crate::formula::Step;
    match f {
        Formula::Neg(a) => {
            let p = here.child(Step::Neg);
            find_all(a, target, &mut p.clone(), out);
        }
        Formula::Conj(a, b) | Formula::Disj(a, b) => {
            find_all(a, target, &mut here.child(Step::Left), out);
            find_all(b, target, &mut here.child(Step::Right), out);
        }
        _ => {}
    }
}

fn term_signature(name: &str) -> Option<&'static [Arg]> {
    use Arg::*;
    Some(match name {
        "id" | "unit_del_fwd_conj" | "unit_del_fwd_disj" | "unit_del_bwd_conj" | "unit_del_bwd_disj"
        | "sigma_fwd_conj" | "sigma_fwd_disj" | "sigma_bwd_conj" | "sigma_bwd_disj" | "tau_l" | "gamma_r"
        | "rho_conj" | "rho_disj" | "rho_inv_conj" | "rho_inv_disj" => &[F],
        "sym_conj" | "sym_disj" | "delta_conj" | "sigma_disj" | "sigma_conj" | "delta_disj" | "delta_prime"
        | "sigma_prime" | "delta_conj_units" | "sigma_disj_units" => &[F, F],
        "assoc_fwd_conj" | "assoc_fwd_disj" | "assoc_bwd_conj" | "assoc_bwd_disj" | "dist" | "dr" => &[F, F, F],
        "eps_disj" | "eps_conj" => &[F, F, F, F],
        "tens_conj" | "tens_disj" => &[T, T],
        "tau_conj" | "tau_conj_inv" => &[X, F],
        "tau_disj" | "tau_disj_inv" => &[Y, F],
        "d_ctx" => &[X, F, Y],
        _ => return None,
    })
}

fn build_term(name: &str, args: Vec<Val>) -> Result<Pattern, Error> {
    let mut fs = Vec::new();
    let mut ts = Vec::new();
    let mut cs = Vec::new();
    for a in args {
        match a {
            Val::F(f) => fs.push(f),
            Val::T(t) => ts.push(t),
            Val::C(c) => cs.push(c),
            Val::N(_) => unreachable!("terms take no net arguments"),
        }
    }
    let f = |i: usize| &fs[i];
    use ArrowTerm as T;
    use Conn::{Conj, Disj};
    let gen = match name {
        "tens_conj" | "tens_disj" => {
            let conn = if name == "tens_conj" { Conj } else { Disj };
            let mut it = ts.into_iter();
            let (l, r) = (it.next().expect("two"), it.next().expect("two"));
            return Ok(Pattern::Tens(conn, Box::new(l), Box::new(r)));
        }
        "id" => T::Id(f(0).clone()),
        "assoc_fwd_conj" => T::AssocFwd(Conj, f(0).clone(), f(1).clone(), f(2).clone()),
        "assoc_fwd_disj" => T::AssocFwd(Disj, f(0).clone(), f(1).clone(), f(2).clone()),
        "assoc_bwd_conj" => T::AssocBwd(Conj, f(0).clone(), f(1).clone(), f(2).clone()),
        "assoc_bwd_disj" => T::AssocBwd(Disj, f(0).clone(), f(1).clone(), f(2).clone()),
        "sym_conj" => T::SymConj(f(0).clone(), f(1).clone()),
        "sym_disj" => T::SymDisj(f(0).clone(), f(1).clone()),
        "dist" => T::Dist(f(0).clone(), f(1).clone(), f(2).clone()),
        "delta_conj" => T::DeltaConj(f(0).clone(), f(1).clone()),
        "sigma_disj" => T::SigmaDisj(f(0).clone(), f(1).clone()),
        "unit_del_fwd_conj" => T::UnitDelFwd(Conj, f(0).clone()),
        "unit_del_fwd_disj" => T::UnitDelFwd(Disj, f(0).clone()),
        "unit_del_bwd_conj" => T::UnitDelBwd(Conj, f(0).clone()),
        "unit_del_bwd_disj" => T::UnitDelBwd(Disj, f(0).clone()),
        "dr" => derived::dr(f(0), f(1), f(2)),
        "sigma_conj" => derived::sigma_conj(f(0), f(1)),
        "delta_disj" => derived::delta_disj(f(0), f(1)),
        "delta_prime" => derived::delta_prime(f(0), f(1)),
        "sigma_prime" => derived::sigma_prime(f(0), f(1)),
        "sigma_fwd_conj" => derived::sigma_fwd(Conj, f(0)),
        "sigma_fwd_disj" => derived::sigma_fwd(Disj, f(0)),
        "sigma_bwd_conj" => derived::sigma_bwd(Conj, f(0)),
        "sigma_bwd_disj" => derived::sigma_bwd(Disj, f(0)),
        "tau_l" => derived::tau_l(f(0)),
        "gamma_r" => derived::gamma_r(f(0)),
        "eps_disj" => derived::eps_disj(f(0), f(1), f(2), f(3)),
        "eps_conj" => derived::eps_conj(f(0), f(1), f(2), f(3)),
        "delta_conj_units" => derived::delta_conj_from_units(f(0), f(1)),
        "sigma_disj_units" => derived::sigma_disj_from_units(f(0), f(1)),
        "tau_conj" => derived::tau_conj(&cs[0], f(0))?,
        "tau_conj_inv" => derived::tau_conj_inv(&cs[0], f(0))?,
        "tau_disj" => derived::tau_disj(&cs[0], f(0))?,
        "tau_disj_inv" => derived::tau_disj_inv(&cs[0], f(0))?,
        "d_ctx" => derived::d_ctx(&cs[0], f(0), &cs[1])?,
        "rho_conj" => derived::rho(Conj, f(0))?,
        "rho_disj" => derived::rho(Disj, f(0))?,
        "rho_inv_conj" => derived::rho_inv(Conj, f(0))?,
        "rho_inv_disj" => derived::rho_inv(Disj, f(0))?,
        _ => unreachable!("signature table and builder agree"),
    };
    Ok(Pattern::from_term(&gen))
}

fn net_signature(name: &str) -> Option<&'static [Arg]> {
    use Arg::*;
    Some(match name {
        "ax" | "id_net" => &[F],
        "assoc_hat_fwd_conj" | "assoc_hat_bwd_conj" => &[X, F, F, F, N],
        "assoc_hat_fwd_disj" | "assoc_hat_bwd_disj" => &[Y, F, F, F, N],
        "sym_hat_conj" => &[X, F, F, N],
        "sym_hat_disj" => &[Y, F, F, N],
        "top_fwd" | "top_bwd" | "bot_fwd" | "bot_bwd" | "neg_l" | "neg_r" => &[N],
        "conj_rule" | "disj_rule" | "tens_net_conj" | "tens_net_disj" => &[N, N],
        "cut" => &[X, Y, F, N, N],
        _ => return None,
    })
}

fn build_net(name: &str, args: Vec<Val>) -> Result<Net, Error> {
    let mut fs = Vec::new();
    let mut cs = Vec::new();
    let mut ns = Vec::new();
    for a in args {
        match a {
            Val::F(f) => fs.push(f),
            Val::C(c) => cs.push(c),
            Val::N(n) => ns.push(n),
            Val::T(_) => unreachable!("nets take no term arguments"),
        }
    }
    use Conn::{Conj, Disj};
    let mut ns = ns.into_iter();
    let mut next = || ns.next().expect("arity checked");
    Ok(match name {
        "ax" => Net::ax(fs[0].clone())?,
        "id_net" => identity_net(&fs[0]),
        "assoc_hat_fwd_conj" | "assoc_hat_bwd_conj" | "assoc_hat_fwd_disj" | "assoc_hat_bwd_disj" => {
            let conn = if name.ends_with("conj") { Conj } else { Disj };
            let dir = if name.contains("fwd") { Dir::Fwd } else { Dir::Bwd };
            Net::assoc_hat(conn, dir, cs[0].clone(), fs[0].clone(), fs[1].clone(), fs[2].clone(), next())?
        }
        "sym_hat_conj" => Net::sym_hat(Conj, cs[0].clone(), fs[0].clone(), fs[1].clone(), next())?,
        "sym_hat_disj" => Net::sym_hat(Disj, cs[0].clone(), fs[0].clone(), fs[1].clone(), next())?,
        "top_fwd" => Net::top_fwd(next()),
        "top_bwd" => Net::top_bwd(next())?,
        "bot_bwd" => Net::bot_bwd(next()),
        "bot_fwd" => Net::bot_fwd(next())?,
        "neg_l" => Net::neg_l(next())?,
        "neg_r" => Net::neg_r(next())?,
        "conj_rule" => {
            let a = next();
            Net::conj_rule(a, next())?
        }
        "disj_rule" => {
            let a = next();
            Net::disj_rule(a, next())?
        }
        "tens_net_conj" => {
            let a = next();
            tens_net(Conj, a, next())
        }
        "tens_net_disj" => {
            let a = next();
            tens_net(Disj, a, next())
        }
        "cut" => {
            let f = next();
            Net::cut(cs[0].clone(), cs[1].clone(), fs[0].clone(), f, next())?
        }
        _ => unreachable!("signature table and builder agree"),
    })
}

pub fn parse_formula(text: &str) -> Result<Formula, Error> {
    let mut p = Parser::new(text, Mode::Plain)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_context(text: &str, conn: Conn) -> Result<Context, Error> {
    let mut p = Parser::new(text, Mode::Plain)?;
    let c = p.context(conn)?;
    p.finish()?;
    Ok(c)
}

pub fn parse_term(text: &str) -> Result<ArrowTerm, Error> {
    let mut p = Parser::new(text, Mode::Plain)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t.to_term().expect("plain terms have no variables"))
}

pub fn parse_net(text: &str) -> Result<Net, Error> {
    let mut p = Parser::new(text, Mode::Plain)?;
    let n = p.net()?;
    p.finish()?;
    Ok(n)
}

/// A pattern with uppercase formula metavariables and bare arrow variables.
pub(crate) fn parse_pattern(text: &str) -> Result<Pattern, Error> {
    let mut p = Parser::new(text, Mode::Pattern)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// `name : A |- B` with metavariables allowed.
pub(crate) fn parse_arrow_decl(text: &str) -> Result<(String, Formula, Formula), Error> {
    let mut p = Parser::new(text, Mode::Pattern)?;
    let pos = p.pos();
    let Tok::Ident(name) = p.bump() else {
        return Err(Error::Syntax { pos, msg: "expected an arrow variable".into() });
    };
    p.expect(Tok::Colon, "':'")?;
    let a = p.formula()?;
    p.expect(Tok::Turnstile, "'|-'")?;
    let b = p.formula()?;
    p.finish()?;
    Ok((name, a, b))
}

/// Reads a sequent `A |- B`.
pub fn parse_sequent(text: &str) -> Result<(Formula, Formula), Error> {
    let mut p = Parser::new(text, Mode::Plain)?;
    let a = p.formula()?;
    p.expect(Tok::Turnstile, "'|-'")?;
    let b = p.formula()?;
    p.finish()?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: &str) -> Formula {
        Formula::letter(n)
    }

    #[test]
    fn formula_precedence() {
        assert_eq!(
            parse_formula("p & (q | ~r)").unwrap(),
            Formula::conj(l("p"), Formula::disj(l("q"), Formula::neg(l("r"))))
        );
        assert_eq!(parse_formula("top & bot").unwrap(), Formula::conj(Formula::Top, Formula::Bot));
        assert_eq!(parse_formula("p & q | r").unwrap(), Formula::disj(Formula::conj(l("p"), l("q")), l("r")));
        assert_eq!(parse_formula("p | q | r").unwrap(), Formula::disj(l("p"), Formula::disj(l("q"), l("r"))));
    }

    #[test]
    fn formula_errors_have_positions() {
        match parse_formula("p & & q") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_formula("P").is_err());
        assert!(parse_formula("p q").is_err());
        assert!(parse_formula("_").is_err());
    }

    #[test]
    fn terms() {
        assert_eq!(parse_term("dist(p,q,r)").unwrap(), ArrowTerm::Dist(l("p"), l("q"), l("r")));
        assert_eq!(
            parse_term("sym_conj(p,q) . id(p & q)").unwrap(),
            ArrowTerm::comp(ArrowTerm::SymConj(l("p"), l("q")), ArrowTerm::Id(Formula::conj(l("p"), l("q"))))
        );
        assert_eq!(
            parse_term("tens_conj(id(p), delta_conj(q,p))").unwrap(),
            ArrowTerm::tens(Conn::Conj, ArrowTerm::Id(l("p")), ArrowTerm::DeltaConj(l("q"), l("p")))
        );
        assert!(matches!(parse_term("frob(p)"), Err(Error::Syntax { .. })));
        assert!(parse_term("f").is_err());
    }

    #[test]
    fn contexts() {
        let x = parse_context("p & (_ & q)", Conn::Conj).unwrap();
        assert_eq!(x.apply(&l("r")), parse_formula("p & (r & q)").unwrap());
        assert!(parse_context("p | _", Conn::Conj).is_err());
        assert!(parse_context("p & q", Conn::Conj).is_err());
        assert!(!parse_context("_", Conn::Disj).unwrap().is_proper());
        assert_eq!(x.to_string(), "p & _ & q");
        assert_eq!(parse_context(&x.to_string(), Conn::Conj).unwrap(), x);
    }

    #[test]
    fn derived_terms_expand() {
        let t = parse_term("tau_conj(f & ((c & _) & b), a)").unwrap();
        assert!(t.type_of().is_ok());
        let round = parse_term(&t.to_string()).unwrap();
        assert_eq!(round, t);
    }

    #[test]
    fn patterns() {
        let p = parse_pattern("f . id(A)").unwrap();
        assert!(matches!(p, Pattern::Comp(..)));
        let (n, a, b) = parse_arrow_decl("g1: B1 |- C1").unwrap();
        assert_eq!((n.as_str(), a, b), ("g1", l("B1"), l("C1")));
    }

    #[test]
    fn sequents() {
        assert_eq!(parse_sequent("p & q |- q").unwrap(), (Formula::conj(l("p"), l("q")), l("q")));
    }
}
