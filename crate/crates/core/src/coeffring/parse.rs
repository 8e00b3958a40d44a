//! Small recursive-descent parser for coefficient expressions such as `(1-t^2)/(q*t)`.

use num_bigint::BigInt;

use super::CoeffError;

pub(crate) trait ParseRing: Sized + Clone {
    fn from_int(n: BigInt) -> Self;
    fn var(name: &str) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Option<Self>;
    fn pow(&self, n: i64) -> Option<Self>;
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

pub(crate) fn parse<R: ParseRing>(s: &str) -> Result<R, CoeffError> {
    let cleaned: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '·' => '*',
            '−' => '-',
            _ => c,
        })
        .collect();
    let mut p = Parser { s: cleaned.as_bytes(), pos: 0 };
    let v = p.expr::<R>()?;
    if p.pos != p.s.len() {
        return Err(p.err());
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn err(&self) -> CoeffError {
        CoeffError::Parse(format!("unexpected input at byte {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expr<R: ParseRing>(&mut self) -> Result<R, CoeffError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                R::from_int(BigInt::from(0)).sub(&self.term::<R>()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term::<R>()?
            }
            _ => self.term::<R>()?,
        };
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term::<R>()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term::<R>()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<R: ParseRing>(&mut self) -> Result<R, CoeffError> {
        let mut acc = self.power::<R>()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power::<R>()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power::<R>()?;
                    acc = acc.div(&d).ok_or(CoeffError::DivisionByZero)?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphabetic() => {
                    acc = acc.mul(&self.power::<R>()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power<R: ParseRing>(&mut self) -> Result<R, CoeffError> {
        let base = self.atom::<R>()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let paren = if self.peek() == Some(b'(') {
                self.pos += 1;
                true
            } else {
                false
            };
            let neg = if paren && self.peek() == Some(b'-') {
                self.pos += 1;
                !neg
            } else {
                neg
            };
            let n = self.integer()?;
            if paren {
                if self.peek() != Some(b')') {
                    return Err(self.err());
                }
                self.pos += 1;
            }
            let n: i64 = n.try_into().map_err(|_| self.err())?;
            return base.pow(if neg { -n } else { n }).ok_or(CoeffError::DivisionByZero);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, CoeffError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err());
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom<R: ParseRing>(&mut self) -> Result<R, CoeffError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr::<R>()?;
                if self.peek() != Some(b')') {
                    return Err(self.err());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(R::from_int(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                R::var(name).ok_or_else(|| CoeffError::Parse(format!("unknown symbol {}", name)))
            }
            _ => Err(self.err()),
        }
    }
}
