//! Expression language for assembling varieties from atoms with
//! cut-and-paste constructors, and an evaluator to E-polynomials.
//!
//! Grammar (ASCII, whitespace-insensitive, decimal integers):
//!
//! ```text
//! atoms         pt  A(n)  T(n)  P(n)  G(k,n)  Curve(g)
//! constructors  prod(x,y)  disj(x,y)  diff(x,y)  affb(x,m)  projb(x,r)
//!               blowup(x,z,c)  sym(x,d)  bb((x1,m1),(x2,m2),...)
//! builtins      nodal_cubic  surfS(g)  cone(x)
//! ```
//!
//! The evaluator cannot verify geometric hypotheses: `diff(x,y)` asserts
//! that y sits in x as a closed subvariety, `blowup` takes the codimension
//! of the center explicitly, and `bb` asserts that the listed fixed
//! components and fiber dimensions come from a decomposition into affine
//! bundles. Those assertions are the caller's responsibility.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::epoly::{Atom, AtomError, EPoly};
use crate::series::sym_powers;

/// Expression tree of geometric atoms and constructors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VarietyExpr {
    Atom(Atom),
    /// Product of varieties.
    Product(Box<VarietyExpr>, Box<VarietyExpr>),
    /// Disjoint union.
    Disjoint(Box<VarietyExpr>, Box<VarietyExpr>),
    /// Open complement of a closed subvariety: whole minus closed part.
    Complement(Box<VarietyExpr>, Box<VarietyExpr>),
    /// Zariski-locally trivial affine bundle with fiber `C^m`.
    AffineBundle(Box<VarietyExpr>, u32),
    /// Projective bundle with fiber `P^r`.
    ProjBundle(Box<VarietyExpr>, u32),
    /// Blowup of the first argument along the second, with the center's
    /// codimension given explicitly (must be >= 1).
    Blowup(Box<VarietyExpr>, Box<VarietyExpr>, u32),
    /// d-th symmetric power.
    SymPower(Box<VarietyExpr>, u32),
    /// Decomposition into attracting cells: pairs of a fixed component and
    /// the affine fiber dimension over it. Nonempty.
    BBDecomp(Vec<(VarietyExpr, u32)>),
}

/// Names of the built-in example varieties.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Builtin {
    /// Plane cubic curve with one node.
    NodalCubic,
    /// Singular projective surface with nonzero odd virtual Betti number,
    /// built from P^1 x C_g by two blowups and two blowdowns; g >= 1.
    SurfaceS(u32),
    /// Projective cone over the given variety.
    Cone(VarietyExpr),
}

impl Builtin {
    /// The frozen expression tree of the builtin (not a hard-coded
    /// polynomial, so evaluating a builtin exercises the full evaluator).
    pub fn expr(&self) -> Result<VarietyExpr, ParseError> {
        match self {
            Builtin::NodalCubic => Ok(VarietyExpr::Disjoint(
                Box::new(VarietyExpr::Atom(Atom::Torus(1))),
                Box::new(VarietyExpr::Atom(Atom::Point)),
            )),
            Builtin::SurfaceS(g) => {
                if *g < 1 {
                    return Err(ParseError::range(0, "surfS requires genus >= 1"));
                }
                let pt = || VarietyExpr::Atom(Atom::Point);
                let curve = || VarietyExpr::Atom(Atom::Curve(*g));
                let y = VarietyExpr::Product(
                    Box::new(VarietyExpr::Atom(Atom::Projective(1))),
                    Box::new(curve()),
                );
                // blow up one point on each fixed curve
                let blown = VarietyExpr::Blowup(
                    Box::new(VarietyExpr::Blowup(Box::new(y), Box::new(pt()), 2)),
                    Box::new(pt()),
                    2,
                );
                // remove the two proper transforms, then add the two points
                // they collapse to
                let removed = VarietyExpr::Complement(
                    Box::new(blown),
                    Box::new(VarietyExpr::Disjoint(Box::new(curve()), Box::new(curve()))),
                );
                Ok(VarietyExpr::Disjoint(
                    Box::new(removed),
                    Box::new(VarietyExpr::Disjoint(Box::new(pt()), Box::new(pt()))),
                ))
            }
            Builtin::Cone(v) => Ok(VarietyExpr::BBDecomp(alloc::vec![
                (v.clone(), 1),
                (VarietyExpr::Atom(Atom::Point), 0),
            ])),
        }
    }
}

impl VarietyExpr {
    /// Evaluate to an E-polynomial.
    pub fn eval(&self) -> Result<EPoly, AtomError> {
        Ok(match self {
            VarietyExpr::Atom(a) => a.epoly()?,
            VarietyExpr::Product(x, y) => &x.eval()? * &y.eval()?,
            VarietyExpr::Disjoint(x, y) => &x.eval()? + &y.eval()?,
            VarietyExpr::Complement(x, y) => &x.eval()? - &y.eval()?,
            VarietyExpr::AffineBundle(b, m) => &b.eval()? * &EPoly::monomial(*m, *m, 1),
            VarietyExpr::ProjBundle(b, r) => &b.eval()? * &Atom::Projective(*r).epoly()?,
            VarietyExpr::Blowup(x, z, c) => {
                let exceptional = &Atom::Projective(c - 1).epoly()? - &EPoly::one();
                &x.eval()? + &(&z.eval()? * &exceptional)
            }
            VarietyExpr::SymPower(b, d) => sym_powers(&b.eval()?, *d).entry(*d).clone(),
            VarietyExpr::BBDecomp(cells) => {
                let mut acc = EPoly::zero();
                for (fixed, m) in cells {
                    acc = &acc + &(&fixed.eval()? * &EPoly::monomial(*m, *m, 1));
                }
                acc
            }
        })
    }
}

/// Parse failure, with the byte offset into the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseError {
    Syntax { pos: usize, message: String },
    Range { pos: usize, message: String },
}

impl ParseError {
    fn syntax(pos: usize, message: &str) -> Self {
        ParseError::Syntax {
            pos,
            message: String::from(message),
        }
    }

    fn range(pos: usize, message: &str) -> Self {
        ParseError::Range {
            pos,
            message: String::from(message),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, message } => {
                write!(f, "syntax error at byte {}: {}", pos, message)
            }
            ParseError::Range { pos, message } => {
                write!(f, "parameter out of range at byte {}: {}", pos, message)
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// Parse an expression in the documented grammar.
pub fn parse(text: &str) -> Result<VarietyExpr, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(ParseError::syntax(p.pos, "trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::syntax(
                self.pos,
                match b {
                    b'(' => "expected '('",
                    b')' => "expected ')'",
                    b',' => "expected ','",
                    _ => "unexpected character",
                },
            ))
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::syntax(start, "expected a name"));
        }
        // grammar keywords are ASCII, so the slice is valid UTF-8
        Ok((
            start,
            core::str::from_utf8(&self.bytes[start..self.pos]).unwrap(),
        ))
    }

    fn integer(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value * 10 + u64::from(b - b'0');
            if value > u32::MAX as u64 {
                return Err(ParseError::range(start, "integer too large"));
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::syntax(start, "expected an integer"));
        }
        Ok((start, value as u32))
    }

    fn int_arg(&mut self) -> Result<(usize, u32), ParseError> {
        self.expect(b'(')?;
        let v = self.integer()?;
        self.expect(b')')?;
        Ok(v)
    }

    fn expr(&mut self) -> Result<VarietyExpr, ParseError> {
        let (start, name) = self.ident()?;
        match name {
            "pt" => Ok(VarietyExpr::Atom(Atom::Point)),
            "A" => Ok(VarietyExpr::Atom(Atom::Affine(self.int_arg()?.1))),
            "T" => Ok(VarietyExpr::Atom(Atom::Torus(self.int_arg()?.1))),
            "P" => Ok(VarietyExpr::Atom(Atom::Projective(self.int_arg()?.1))),
            "Curve" => Ok(VarietyExpr::Atom(Atom::Curve(self.int_arg()?.1))),
            "G" => {
                self.expect(b'(')?;
                let (kpos, k) = self.integer()?;
                self.expect(b',')?;
                let (_, n) = self.integer()?;
                self.expect(b')')?;
                if k > n {
                    return Err(ParseError::range(kpos, "G(k,n) requires k <= n"));
                }
                Ok(VarietyExpr::Atom(Atom::Grassmannian(k, n)))
            }
            "prod" | "disj" | "diff" => {
                self.expect(b'(')?;
                let x = Box::new(self.expr()?);
                self.expect(b',')?;
                let y = Box::new(self.expr()?);
                self.expect(b')')?;
                Ok(match name {
                    "prod" => VarietyExpr::Product(x, y),
                    "disj" => VarietyExpr::Disjoint(x, y),
                    _ => VarietyExpr::Complement(x, y),
                })
            }
            "affb" | "projb" | "sym" => {
                self.expect(b'(')?;
                let x = Box::new(self.expr()?);
                self.expect(b',')?;
                let (_, m) = self.integer()?;
                self.expect(b')')?;
                Ok(match name {
                    "affb" => VarietyExpr::AffineBundle(x, m),
                    "projb" => VarietyExpr::ProjBundle(x, m),
                    _ => VarietyExpr::SymPower(x, m),
                })
            }
            "blowup" => {
                self.expect(b'(')?;
                let x = Box::new(self.expr()?);
                self.expect(b',')?;
                let z = Box::new(self.expr()?);
                self.expect(b',')?;
                let (cpos, c) = self.integer()?;
                self.expect(b')')?;
                if c < 1 {
                    return Err(ParseError::range(cpos, "blowup codimension must be >= 1"));
                }
                Ok(VarietyExpr::Blowup(x, z, c))
            }
            "bb" => {
                self.expect(b'(')?;
                let mut cells = Vec::new();
                loop {
                    self.expect(b'(')?;
                    let x = self.expr()?;
                    self.expect(b',')?;
                    let (_, m) = self.integer()?;
                    self.expect(b')')?;
                    cells.push((x, m));
                    self.skip_ws();
                    if self.bytes.get(self.pos) == Some(&b',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.expect(b')')?;
                Ok(VarietyExpr::BBDecomp(cells))
            }
            "nodal_cubic" => Builtin::NodalCubic.expr(),
            "surfS" => {
                let (gpos, g) = self.int_arg()?;
                Builtin::SurfaceS(g)
                    .expr()
                    .map_err(|_| ParseError::range(gpos, "surfS requires genus >= 1"))
            }
            "cone" => {
                self.expect(b'(')?;
                let x = self.expr()?;
                self.expect(b')')?;
                Builtin::Cone(x).expr()
            }
            _ => Err(ParseError::syntax(start, "unknown name")),
        }
    }
}
