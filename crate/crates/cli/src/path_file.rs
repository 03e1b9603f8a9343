//! Path files: a JSON array of rows, each a list of strings denoting
//! elements of ℚ(t), e.g. `[["t^2", "0"], ["0", "(t+1)/t"]]`.
//!
//! Entry grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | 't' | '(' expr ')'
//! ```

use liealg_core::exactmath::{Matrix, Rat, RatFunc, Scalar, UniPoly};

use crate::algebra_file::{json_error, FileError};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, String> {
        Err(format!("{msg} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let d = self.unary()?;
                match d.inv() {
                    Some(inv) => acc = acc.mul(&inv),
                    None => return self.err("division by zero"),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, String> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFunc, String> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        let e: u32 = match self.integer()?.parse() {
            Ok(e) if e <= 10_000 => e,
            _ => return self.err("exponent too large"),
        };
        let mut out = RatFunc::one();
        for _ in 0..e {
            out = out.mul(&base);
        }
        if negative {
            match out.inv() {
                Some(inv) => Ok(inv),
                None => self.err("negative power of zero"),
            }
        } else {
            Ok(out)
        }
    }

    fn integer(&mut self) -> Result<&'a str, String> {
        self.peek();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII digits"))
    }

    fn atom(&mut self) -> Result<RatFunc, String> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::from_poly(UniPoly::t()))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let r: Rat = self.integer()?.parse().expect("digits parse as a rational");
                Ok(RatFunc::constant(r))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_ratfunc(s: &str) -> Result<RatFunc, String> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_path(bytes: &[u8]) -> Result<Matrix<RatFunc>, FileError> {
    let rows: Vec<Vec<String>> = serde_json::from_slice(bytes).map_err(|e| json_error(&e))?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(FileError::Invalid("path matrix must be square and nonempty".into()));
    }
    let mut data = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            data.push(parse_ratfunc(s).map_err(|message| FileError::Parse {
                locus: format!("[{i}][{j}]"),
                message,
            })?);
        }
    }
    Ok(Matrix::new(n, n, data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use liealg_core::exactmath::{int, rat};

    fn show(s: &str) -> String {
        parse_ratfunc(s).unwrap().to_string()
    }

    #[test]
    fn grammar() {
        assert_eq!(parse_ratfunc("t^2").unwrap(), RatFunc::t_pow(2));
        assert_eq!(parse_ratfunc("1/t").unwrap(), RatFunc::t_pow(-1));
        assert_eq!(parse_ratfunc("t^-3").unwrap(), RatFunc::t_pow(-3));
        assert_eq!(show("(t+1)/t"), "(t + 1)/t");
        assert_eq!(show("(2*t)/t"), "2");
        assert_eq!(show("-t - -t"), "0");
        assert_eq!(show("1 - 2*t^2"), "-2*t^2 + 1");
        assert_eq!(parse_ratfunc("3/6").unwrap(), RatFunc::constant(rat(1, 2)));
        assert_eq!(parse_ratfunc(" 0 ").unwrap(), RatFunc::constant(int(0)));
    }

    #[test]
    fn rejects() {
        for bad in ["", "t t", "2t", "1.5", "x", "1/(t-t)", "(t", "t^", "0^-1", "t^99999"] {
            assert!(parse_ratfunc(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn path_matrix() {
        let m = parse_path(br#"[["t^2", "0", "0"], ["0", "t", "0"], ["0", "0", "t"]]"#).unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(*m.get(0, 0), RatFunc::t_pow(2));
        assert!(parse_path(br#"[["1", "0"]]"#).is_err());
        assert!(matches!(parse_path(br#"[["1/0"]]"#), Err(FileError::Parse { .. })));
    }
}
