//! Parser for the function-family literals used on the command line:
//! `bump(r)`, `gauss(a)`, `cexp(c…)`, `chirp`, `poly(c0,c1,…)`, `const(v)`,
//! `dilate(f,c)`, `translate(f,x0…)`, products with `*`, sums with `+`.

use super::{SymbolicError, SymbolicFunction};
use num_complex::Complex64;

struct P<'a> {
    src: &'a str,
    pos: usize,
    dimension: u32,
}

/// Parses a function literal over ℝⁿ.
pub fn parse_function(text: &str, dimension: u32) -> Result<SymbolicFunction, SymbolicError> {
    let mut p = P {
        src: text,
        pos: 0,
        dimension,
    };
    let f = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

impl<'a> P<'a> {
    fn err(&self, message: &str) -> SymbolicError {
        SymbolicError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.src.len() - t.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), SymbolicError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{tok}`")))
        }
    }

    fn sum(&mut self) -> Result<SymbolicFunction, SymbolicError> {
        let mut acc = self.product()?;
        while self.eat("+") {
            acc = acc.add(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<SymbolicFunction, SymbolicError> {
        let mut acc = self.factor()?;
        while self.eat("*") {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SymbolicFunction, SymbolicError> {
        self.skip_ws();
        let n = self.dimension;
        if self.eat("bump") {
            let args = self.args(1)?;
            return SymbolicFunction::bump(n, args[0]);
        }
        if self.eat("gauss") {
            let args = self.args(1)?;
            return SymbolicFunction::gaussian(n, args[0]);
        }
        if self.eat("cexp") {
            let args = self.args(n as usize)?;
            return Ok(SymbolicFunction::complex_exp(args));
        }
        if self.eat("chirp") {
            return Ok(SymbolicFunction::chirp(n));
        }
        if self.eat("poly") {
            let args = self.var_args()?;
            let coeffs: Vec<Complex64> = args.iter().map(|&c| Complex64::new(c, 0.0)).collect();
            return Ok(SymbolicFunction::polynomial(n, &coeffs));
        }
        if self.eat("const") {
            let args = self.args(1)?;
            return Ok(SymbolicFunction::constant(n, Complex64::new(args[0], 0.0)));
        }
        if self.eat("dilate") {
            self.expect("(")?;
            let inner = self.sum()?;
            self.expect(",")?;
            let c = self.number()?;
            self.expect(")")?;
            return inner.dilate(c);
        }
        if self.eat("translate") {
            self.expect("(")?;
            let inner = self.sum()?;
            let mut shift = Vec::with_capacity(n as usize);
            for _ in 0..n {
                self.expect(",")?;
                shift.push(self.number()?);
            }
            self.expect(")")?;
            return Ok(inner.translate(&shift));
        }
        if self.eat("(") {
            let inner = self.sum()?;
            self.expect(")")?;
            return Ok(inner);
        }
        Err(self.err("expected a function literal"))
    }

    fn args(&mut self, count: usize) -> Result<Vec<f64>, SymbolicError> {
        let args = self.var_args()?;
        if args.len() != count {
            return Err(self.err(&format!("expected {count} argument(s), got {}", args.len())));
        }
        Ok(args)
    }

    fn var_args(&mut self) -> Result<Vec<f64>, SymbolicError> {
        self.expect("(")?;
        let mut out = vec![self.number()?];
        while self.eat(",") {
            out.push(self.number()?);
        }
        self.expect(")")?;
        Ok(out)
    }

    fn number(&mut self) -> Result<f64, SymbolicError> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| {
                c.is_ascii_digit()
                    || c == '.'
                    || (c == '-' && i == 0)
                    || (c == '+' && i == 0)
                    || c == 'e'
                    || c == 'E'
            })
            .count();
        // allow a sign right after an exponent marker
        let mut len = len;
        if len > 0 && (rest.as_bytes()[len - 1] == b'e' || rest.as_bytes()[len - 1] == b'E') {
            let tail = &rest[len..];
            if tail.starts_with('-') || tail.starts_with('+') {
                let digits = tail[1..].chars().take_while(|c| c.is_ascii_digit()).count();
                if digits > 0 {
                    len += 1 + digits;
                }
            }
        }
        if len == 0 {
            return Err(self.err("expected a number"));
        }
        let text = &rest[..len];
        let v: f64 = text.parse().map_err(|_| self.err("malformed number"))?;
        self.pos += len;
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families_and_combinators() {
        let f = parse_function("gauss(1)", 1).unwrap();
        assert_eq!(f, SymbolicFunction::gaussian(1, 1.0).unwrap());
        let f = parse_function("dilate(bump(1), 2)", 1).unwrap();
        assert_eq!(f.support_radius(), Some(0.5));
        let f = parse_function("translate(bump(1), 2.5)", 1).unwrap();
        assert_eq!(f.support_radius(), Some(3.5));
        let f = parse_function("gauss(1) * cexp(2) + const(0.5)", 1).unwrap();
        let g = SymbolicFunction::gaussian(1, 1.0).unwrap();
        let c = SymbolicFunction::complex_exp(vec![2.0]);
        let half = SymbolicFunction::constant(1, num_complex::Complex64::new(0.5, 0.0));
        assert_eq!(f, g.mul(&c).add(&half));
    }

    #[test]
    fn parses_polynomials_and_negative_numbers() {
        let f = parse_function("poly(0, -1.5, 1e-2)", 1).unwrap();
        let v = f.evaluate(&[2.0]);
        assert!((v.re - (-3.0 + 0.04)).abs() < 1e-12);
    }

    #[test]
    fn dimension_drives_argument_counts() {
        assert!(parse_function("cexp(1)", 2).is_err());
        let f = parse_function("cexp(1, 2)", 2).unwrap();
        assert_eq!(f.dimension(), 2);
        let t = parse_function("translate(gauss(1), 0.5, -0.5)", 2).unwrap();
        assert_eq!(t.dimension(), 2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_function("gauss(1) extra", 1).is_err());
        assert!(parse_function("bump()", 1).is_err());
        assert!(parse_function("bump(-1)", 1).is_err());
        assert!(parse_function("spline(3)", 1).is_err());
    }
}
