//! The compact generator-word grammar, e.g. `"y1:1,t:2,0.5,x1:1"`.
//!
//! Tokens are comma separated. `x<i>:<a>` and `y<i>:<a>` are elementary
//! unipotent factors; `t:<t_1>` followed by `n - 1` further bare numbers is
//! a diagonal torus element. Numbers are integers, decimals or `p/q`, and
//! are parsed exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::exact::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    X(usize, Rational),
    Y(usize, Rational),
    Torus(Vec<Rational>),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(i, a) => write!(f, "x{i}:{a}"),
            Generator::Y(i, a) => write!(f, "y{i}:{a}"),
            Generator::Torus(t) => {
                write!(f, "t")?;
                for (k, x) in t.iter().enumerate() {
                    write!(f, "{}{x}", if k == 0 { ":" } else { "," })?;
                }
                Ok(())
            }
        }
    }
}

/// Parses `"3"`, `"-0.25"`, `"1.5e-3"` or `"2/7"` exactly.
pub fn parse_number(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::validation(format!("{s:?} is not a number"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse().map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32 - 1;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(all);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -value } else { value })
}

fn parse_letter(token: &str, n: usize) -> Result<Generator> {
    let bad = || Error::validation(format!("cannot parse generator {token:?}"));
    let (head, value) = token.split_once(':').ok_or_else(bad)?;
    let head = head.trim();
    let kind = head.chars().next().ok_or_else(bad)?;
    let i: usize = head[1..].parse().map_err(|_| bad())?;
    if !(1..n).contains(&i) {
        return Err(Error::validation(format!(
            "generator index {i} out of range for SL_{n}"
        )));
    }
    let a = parse_number(value)?;
    if a.is_negative() {
        return Err(Error::validation(format!(
            "parameter {a} of {head} is negative"
        )));
    }
    match kind {
        'x' | 'X' => Ok(Generator::X(i, a)),
        'y' | 'Y' => Ok(Generator::Y(i, a)),
        _ => Err(bad()),
    }
}

/// Parses a generator word for `SL_n`.
pub fn parse_generators(s: &str, n: usize) -> Result<Vec<Generator>> {
    let tokens: Vec<&str> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < tokens.len() {
        let token = tokens[k];
        if let Some(first) = token.strip_prefix("t:").or_else(|| token.strip_prefix("T:")) {
            if k + n > tokens.len() {
                return Err(Error::validation(format!(
                    "torus factor needs {n} entries"
                )));
            }
            let mut entries = vec![parse_number(first)?];
            for t in &tokens[k + 1..k + n] {
                entries.push(parse_number(t)?);
            }
            check_torus(&entries)?;
            out.push(Generator::Torus(entries));
            k += n;
        } else {
            out.push(parse_letter(token, n)?);
            k += 1;
        }
    }
    Ok(out)
}

pub(crate) fn check_torus(entries: &[Rational]) -> Result<()> {
    if entries.iter().any(|t| !t.is_positive()) {
        return Err(Error::validation("torus entries must be positive"));
    }
    let product = entries.iter().fold(Rational::one(), |acc, t| acc * t);
    if !product.is_one() {
        return Err(Error::validation(format!(
            "torus entries multiply to {product}, not 1"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::exact::rat;

    #[test]
    fn numbers() {
        assert_eq!(parse_number("0.5").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_number("2/6").unwrap(), Rational::new(1.into(), 3.into()));
        assert_eq!(parse_number("-3").unwrap(), rat(-3));
        assert_eq!(parse_number("1.5e-1").unwrap(), Rational::new(3.into(), 20.into()));
        assert_eq!(parse_number(".25").unwrap(), Rational::new(1.into(), 4.into()));
        assert!(parse_number("abc").is_err());
        assert!(parse_number("1/0").is_err());
        assert!(parse_number(".").is_err());
    }

    #[test]
    fn words() {
        let w = parse_generators("y1:1,t:2,0.5,x1:1", 2).unwrap();
        assert_eq!(
            w,
            vec![
                Generator::Y(1, rat(1)),
                Generator::Torus(vec![rat(2), Rational::new(1.into(), 2.into())]),
                Generator::X(1, rat(1)),
            ]
        );
        assert!(parse_generators("", 3).unwrap().is_empty());
        assert!(parse_generators("x1:-1", 3).is_err());
        assert!(parse_generators("x3:1", 3).is_err());
        assert!(parse_generators("t:2,2", 2).is_err());
        assert!(parse_generators("t:2", 2).is_err());
        assert!(parse_generators("z1:1", 2).is_err());
    }
}
