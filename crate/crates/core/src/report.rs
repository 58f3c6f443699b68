use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};

use crate::error::Error;

/// Route used to obtain a [`DimensionReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Chars,
    Burnside,
    Orbits,
    Diagrams,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Closed,
        Method::Chars,
        Method::Burnside,
        Method::Orbits,
        Method::Diagrams,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Chars => "chars",
            Method::Burnside => "burnside",
            Method::Orbits => "orbits",
            Method::Diagrams => "diagrams",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method, Error> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("unknown method '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub group: String,
    pub order: u64,
    pub num_classes: u64,
    /// Not every route produces d₁ and d₂ separately.
    pub d1: Option<BigRational>,
    pub d2: Option<BigRational>,
    pub dim_cpi: BigInt,
    pub dim_ker_eps: BigInt,
    pub dim_classhat_z2: BigInt,
    pub method: Method,
    pub millis: u128,
}

/// Integers as plain digits, other rationals as `num/den`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("auto".parse::<Method>().is_err());
    }

    #[test]
    fn rational_format() {
        assert_eq!(format_rational(&BigRational::new(6.into(), 3.into())), "2");
        assert_eq!(
            format_rational(&BigRational::new((-3).into(), 6.into())),
            "-1/2"
        );
    }
}
