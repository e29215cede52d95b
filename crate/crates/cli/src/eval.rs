use qheis::algebra::{reduce_poly, Element, RuleSet, Word, WordPoly};
use qheis::coeff::RatFun;

use crate::error::DomainError;
use crate::parser::{Ast, Atom};

/// A scalar stays a rational function until it meets an algebra element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(RatFun),
    Poly(WordPoly),
}

impl Value {
    fn into_poly(self) -> WordPoly {
        match self {
            Value::Scalar(c) => WordPoly::term(c, Word::empty()),
            Value::Poly(p) => p,
        }
    }
}

/// Evaluates with the given rule set, reducing after every product. With the
/// completed rules the result is always in normal form; with the printed
/// rules irreducible non-basis words may remain.
pub fn eval_with(ast: &Ast, rules: &RuleSet) -> Result<WordPoly, DomainError> {
    Ok(reduce_poly(&Evaluator { rules }.eval(ast)?.into_poly(), rules))
}

/// Normal form under the completed rules.
pub fn eval_ast(ast: &Ast) -> Result<Element, DomainError> {
    Ok(eval_with(ast, &RuleSet::completed())?.to_element()?)
}

/// Evaluates an expression that must not involve `A`, `B`, `C` or `I`.
pub fn eval_scalar(ast: &Ast) -> Result<RatFun, DomainError> {
    match (Evaluator {
        rules: &RuleSet::completed(),
    })
    .eval(ast)?
    {
        Value::Scalar(c) => Ok(c),
        Value::Poly(_) => Err(DomainError::NotScalar),
    }
}

struct Evaluator<'a> {
    rules: &'a RuleSet,
}

fn neg_poly(p: &WordPoly) -> WordPoly {
    let mut out = WordPoly::zero();
    out.add_poly(p, &-RatFun::one());
    out
}

impl Evaluator<'_> {
    fn mul_poly(&self, x: &WordPoly, y: &WordPoly) -> WordPoly {
        let mut out = WordPoly::zero();
        for (u, c) in x.terms() {
            for (v, d) in y.terms() {
                out.add_term(c * d, u.concat(v));
            }
        }
        reduce_poly(&out, self.rules)
    }

    fn mul(&self, x: Value, y: Value) -> Value {
        match (x, y) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a * &b),
            (Value::Scalar(a), Value::Poly(p)) | (Value::Poly(p), Value::Scalar(a)) => {
                let mut out = WordPoly::zero();
                out.add_poly(&p, &a);
                Value::Poly(out)
            }
            (Value::Poly(p), Value::Poly(r)) => Value::Poly(self.mul_poly(&p, &r)),
        }
    }

    fn bracket(&self, x: &WordPoly, y: &WordPoly) -> WordPoly {
        let mut out = self.mul_poly(x, y);
        out.add_poly(&self.mul_poly(y, x), &-RatFun::one());
        out
    }

    fn eval(&self, ast: &Ast) -> Result<Value, DomainError> {
        Ok(match ast {
            Ast::Scalar(c) => Value::Scalar(c.clone()),
            Ast::Atom(a) => {
                let w: Word = match a {
                    Atom::A => "A",
                    Atom::B => "B",
                    Atom::C => "C",
                    Atom::I => "I",
                }
                .parse()
                .expect("generator letter");
                Value::Poly(WordPoly::word(w))
            }
            Ast::Neg(x) => match self.eval(x)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Poly(p) => Value::Poly(neg_poly(&p)),
            },
            Ast::Sum(xs) => {
                let mut acc = Value::Scalar(RatFun::zero());
                for x in xs {
                    acc = match (acc, self.eval(x)?) {
                        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b),
                        (a, b) => {
                            let mut p = a.into_poly();
                            p.add_poly(&b.into_poly(), &RatFun::one());
                            Value::Poly(p)
                        }
                    };
                }
                acc
            }
            Ast::Product(xs) => {
                let mut acc = Value::Scalar(RatFun::one());
                for x in xs {
                    acc = self.mul(acc, self.eval(x)?);
                }
                acc
            }
            Ast::Quotient(x, y) => {
                let d = match self.eval(y)? {
                    Value::Scalar(d) => d,
                    Value::Poly(_) => return Err(DomainError::NonScalarDivisor),
                };
                let inv = d.recip()?;
                self.mul(self.eval(x)?, Value::Scalar(inv))
            }
            Ast::Power(x, e) => match self.eval(x)? {
                Value::Scalar(c) => Value::Scalar(c.pow(*e as i64)?),
                Value::Poly(p) => {
                    let mut acc = WordPoly::word(Word::empty());
                    for _ in 0..*e {
                        acc = self.mul_poly(&acc, &p);
                    }
                    Value::Poly(acc)
                }
            },
            Ast::Bracket(x, y) => {
                let (x, y) = (self.eval(x)?.into_poly(), self.eval(y)?.into_poly());
                Value::Poly(self.bracket(&x, &y))
            }
            Ast::AdPower(x, m, y) => {
                let x = self.eval(x)?.into_poly();
                let mut acc = self.eval(y)?.into_poly();
                for _ in 0..*m {
                    acc = self.bracket(&x, &acc);
                }
                Value::Poly(acc)
            }
        })
    }
}
