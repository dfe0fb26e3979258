use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Named parameter quadruples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    Seidel,
}

impl Preset {
    pub const ALL: [Preset; 4] = [
        Preset::Adjacency,
        Preset::Laplacian,
        Preset::SignlessLaplacian,
        Preset::Seidel,
    ];

    /// `(alpha, beta, gamma, eta)`.
    pub fn quadruple(self) -> [i64; 4] {
        match self {
            Preset::Adjacency => [1, 0, 0, 0],
            Preset::Laplacian => [-1, 1, 0, 0],
            Preset::SignlessLaplacian => [1, 1, 0, 0],
            Preset::Seidel => [-2, 0, -1, 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Adjacency => "adjacency",
            Preset::Laplacian => "laplacian",
            Preset::SignlessLaplacian => "signless",
            Preset::Seidel => "seidel",
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "adjacency" | "a" => Ok(Preset::Adjacency),
            "laplacian" | "l" => Ok(Preset::Laplacian),
            "signless" | "signless-laplacian" | "q" => Ok(Preset::SignlessLaplacian),
            "seidel" | "s" => Ok(Preset::Seidel),
            other => Err(Error::Parse(format!("unknown preset {other:?}"))),
        }
    }
}

/// Coefficients of `U = alpha A + beta D + gamma I + eta J`, with `alpha != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniversalParams {
    alpha: f64,
    beta: f64,
    gamma: f64,
    eta: f64,
}

impl UniversalParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, eta: f64) -> Result<Self> {
        if ![alpha, beta, gamma, eta].iter().all(|x| x.is_finite()) {
            return Err(Error::NonRational);
        }
        if alpha == 0.0 {
            return Err(Error::AlphaZero);
        }
        Ok(UniversalParams {
            alpha,
            beta,
            gamma,
            eta,
        })
    }

    pub fn from_quadruple(q: [f64; 4]) -> Result<Self> {
        Self::new(q[0], q[1], q[2], q[3])
    }

    pub fn preset(preset: Preset) -> Self {
        let [a, b, g, e] = preset.quadruple();
        UniversalParams {
            alpha: a as f64,
            beta: b as f64,
            gamma: g as f64,
            eta: e as f64,
        }
    }

    pub fn adjacency() -> Self {
        Self::preset(Preset::Adjacency)
    }

    pub fn laplacian() -> Self {
        Self::preset(Preset::Laplacian)
    }

    pub fn signless_laplacian() -> Self {
        Self::preset(Preset::SignlessLaplacian)
    }

    pub fn seidel() -> Self {
        Self::preset(Preset::Seidel)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn quadruple(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.eta]
    }
}

impl fmt::Display for UniversalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.alpha, self.beta, self.gamma, self.eta)
    }
}

/// Accepts a preset name or `alpha,beta,gamma,eta`.
impl FromStr for UniversalParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExactParams::from_str(s).and_then(|p| p.to_f64())
    }
}

/// Parameters for `Z`, complemented: `U(complement G, p) = U(G, p')`.
///
/// `p' = (-alpha, -beta, gamma + beta (order - 1) - alpha, eta + alpha)`.
pub fn complement_params(p: &UniversalParams, order: usize) -> UniversalParams {
    let m = order.saturating_sub(1) as f64;
    UniversalParams {
        alpha: -p.alpha,
        beta: -p.beta,
        gamma: p.gamma + p.beta * m - p.alpha,
        eta: p.eta + p.alpha,
    }
}

/// Exact rational counterpart of [`UniversalParams`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactParams {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    pub eta: BigRational,
}

impl ExactParams {
    pub fn new(alpha: BigRational, beta: BigRational, gamma: BigRational, eta: BigRational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::AlphaZero);
        }
        Ok(ExactParams {
            alpha,
            beta,
            gamma,
            eta,
        })
    }

    pub fn from_integers(q: [i64; 4]) -> Result<Self> {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        Self::new(r(q[0]), r(q[1]), r(q[2]), r(q[3]))
    }

    pub fn preset(preset: Preset) -> Self {
        Self::from_integers(preset.quadruple()).expect("presets have alpha != 0")
    }

    /// The binary64 values as exact dyadic rationals.
    pub fn from_f64(p: &UniversalParams) -> Result<Self> {
        let r = |x: f64| BigRational::from_float(x).ok_or(Error::NonRational);
        Self::new(r(p.alpha)?, r(p.beta)?, r(p.gamma)?, r(p.eta)?)
    }

    pub fn to_f64(&self) -> Result<UniversalParams> {
        let f = |x: &BigRational| x.to_f64().ok_or(Error::NonRational);
        UniversalParams::new(f(&self.alpha)?, f(&self.beta)?, f(&self.gamma)?, f(&self.eta)?)
    }

    pub fn complement(&self, order: usize) -> ExactParams {
        let m = BigRational::from_integer(BigInt::from(order.saturating_sub(1)));
        ExactParams {
            alpha: -self.alpha.clone(),
            beta: -self.beta.clone(),
            gamma: &self.gamma + &self.beta * m - &self.alpha,
            eta: &self.eta + &self.alpha,
        }
    }
}

impl FromStr for ExactParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(preset) = s.parse::<Preset>() {
            return Ok(ExactParams::preset(preset));
        }
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "expected a preset or four comma-separated numbers, got {s:?}"
            )));
        }
        let v = parts.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()?;
        let [a, b, g, e]: [BigRational; 4] = v.try_into().expect("length checked");
        ExactParams::new(a, b, g, e)
    }
}

/// Longest accepted decimal literal, and largest accepted `|exponent|`.
const MAX_DECIMAL_LEN: usize = 4096;
const MAX_EXPONENT: u32 = 4096;
/// Each side of `num/den`; covers everything [`format_rational`] prints for
/// an accepted decimal, so printed values always parse back.
const MAX_FRACTION_PART_LEN: usize = 2 * (MAX_DECIMAL_LEN + MAX_EXPONENT as usize) + 2;

/// Parses `-3`, `2.75`, `1e-3`, `-1.5E2` or `7/4` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {}", abbreviate(s)));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        if num.len() > MAX_FRACTION_PART_LEN || den.len() > MAX_FRACTION_PART_LEN {
            return Err(bad());
        }
        let num: BigInt = parse_integer(num.trim()).ok_or_else(bad)?;
        let den: BigInt = parse_integer(den.trim()).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if s.len() > MAX_DECIMAL_LEN {
        return Err(bad());
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    if exponent.unsigned_abs() > MAX_EXPONENT {
        return Err(bad());
    }
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let pow = num::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= pow;
    } else {
        value /= pow;
    }
    Ok(if negative { -value } else { value })
}

fn abbreviate(s: &str) -> String {
    match s.char_indices().nth(40) {
        Some((i, _)) => format!("{:?}... ({} bytes)", &s[..i], s.len()),
        None => format!("{s:?}"),
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `num/den` with an explicit denominator, also for integers.
pub fn format_rational(r: &BigRational) -> String {
    let r = r.reduced();
    let (n, d) = (r.numer(), r.denom());
    if d.is_negative() {
        format!("{}/{}", -n, -d)
    } else {
        format!("{n}/{d}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn presets() {
        assert_eq!(UniversalParams::adjacency().quadruple(), [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(UniversalParams::laplacian().quadruple(), [-1.0, 1.0, 0.0, 0.0]);
        assert_eq!(UniversalParams::seidel().quadruple(), [-2.0, 0.0, -1.0, 1.0]);
        assert_eq!(UniversalParams::signless_laplacian().quadruple(), [1.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn alpha_zero_rejected() {
        assert_eq!(UniversalParams::new(0.0, 1.0, 0.0, 0.0), Err(Error::AlphaZero));
        assert_eq!("0,1,0,0".parse::<UniversalParams>(), Err(Error::AlphaZero));
        assert_eq!(UniversalParams::new(f64::NAN, 1.0, 0.0, 0.0), Err(Error::NonRational));
    }

    #[test]
    fn complement_presets() {
        let n = 9;
        assert_eq!(
            complement_params(&UniversalParams::adjacency(), n).quadruple(),
            [-1.0, 0.0, -1.0, 1.0]
        );
        assert_eq!(
            complement_params(&UniversalParams::laplacian(), n).quadruple(),
            [1.0, -1.0, n as f64, -1.0]
        );
        assert_eq!(
            complement_params(&UniversalParams::seidel(), n).quadruple(),
            [2.0, 0.0, 1.0, -1.0]
        );
        assert_eq!(
            complement_params(&UniversalParams::signless_laplacian(), n).quadruple(),
            [-1.0, -1.0, n as f64 - 2.0, 1.0]
        );
    }

    #[test]
    fn exact_complement_matches_float() {
        let p = UniversalParams::new(1.5, -0.25, 3.0, 2.0).unwrap();
        let e = ExactParams::from_f64(&p).unwrap().complement(11);
        assert_eq!(e.to_f64().unwrap(), complement_params(&p, 11));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-3").unwrap(), q(-3, 1));
        assert_eq!(parse_rational("2.75").unwrap(), q(11, 4));
        assert_eq!(parse_rational("0.1").unwrap(), q(1, 10));
        assert_eq!(parse_rational("1e-3").unwrap(), q(1, 1000));
        assert_eq!(parse_rational("-1.5E2").unwrap(), q(-150, 1));
        assert_eq!(parse_rational("7/4").unwrap(), q(7, 4));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        for bad in ["", "abc", "1/0", "1..2", "--1", "1e", "e5", ".", "1/-", "1e99999"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn extreme_literals_round_trip() {
        let longest = format!("0.{}e-{MAX_EXPONENT}", "7".repeat(MAX_DECIMAL_LEN - 2 - 6));
        for text in [format!("9e{MAX_EXPONENT}"), format!("-1e-{MAX_EXPONENT}"), longest] {
            let r = parse_rational(&text).unwrap();
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r, "{}", &text[..12]);
        }
        assert!(parse_rational(&"1".repeat(MAX_DECIMAL_LEN + 1)).is_err());
        assert!(parse_rational(&format!("1/{}", "1".repeat(MAX_FRACTION_PART_LEN + 1))).is_err());
    }

    #[test]
    fn params_parsing() {
        let p: ExactParams = "1/2,0.25,-1,3".parse().unwrap();
        assert_eq!(p.alpha, q(1, 2));
        assert_eq!(p.beta, q(1, 4));
        assert_eq!(
            "laplacian".parse::<ExactParams>().unwrap(),
            ExactParams::preset(Preset::Laplacian)
        );
        assert!("1,2,3".parse::<ExactParams>().is_err());
        assert_eq!(format_rational(&q(-6, 4)), "-3/2");
        assert_eq!(format_rational(&q(5, 1)), "5/1");
    }
}
