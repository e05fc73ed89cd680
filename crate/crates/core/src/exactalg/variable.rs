use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use super::PolyError;

/// Number of indexed slots per family (`x0..x31`, `y0..y31`, `r0..r31`).
pub const MAX_INDEX: usize = 32;

/// One of the fixed indeterminates `p, q, r, x, y` or an indexed
/// `x_i, y_i, r_i` with `i < 32`.
///
/// The wrapped value is the position in the canonical order
/// `p < q < r < r0 < … < r31 < x < x0 < … < x31 < y < y0 < … < y31`,
/// which is lexicographic on names with numeric suffixes compared as numbers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(u8);

/// Families that carry an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    X,
    Y,
    R,
}

const R_BASE: u8 = 3;
const X_PLAIN: u8 = R_BASE + MAX_INDEX as u8;
const X_BASE: u8 = X_PLAIN + 1;
const Y_PLAIN: u8 = X_BASE + MAX_INDEX as u8;
const Y_BASE: u8 = Y_PLAIN + 1;
const END: u8 = Y_BASE + MAX_INDEX as u8;

impl Variable {
    pub const P: Variable = Variable(0);
    pub const Q: Variable = Variable(1);
    pub const R: Variable = Variable(2);
    pub const X: Variable = Variable(X_PLAIN);
    pub const Y: Variable = Variable(Y_PLAIN);

    pub fn indexed(family: Family, i: usize) -> Result<Variable, PolyError> {
        if i >= MAX_INDEX {
            return Err(PolyError::VariableIndex(i));
        }
        let base = match family {
            Family::X => X_BASE,
            Family::Y => Y_BASE,
            Family::R => R_BASE,
        };
        Ok(Variable(base + i as u8))
    }

    pub fn x(i: usize) -> Result<Variable, PolyError> {
        Self::indexed(Family::X, i)
    }

    pub fn y(i: usize) -> Result<Variable, PolyError> {
        Self::indexed(Family::Y, i)
    }

    pub fn r(i: usize) -> Result<Variable, PolyError> {
        Self::indexed(Family::R, i)
    }

    /// Every variable in canonical order.
    pub fn all() -> impl Iterator<Item = Variable> {
        (0..END).map(Variable)
    }

    fn parts(self) -> (char, Option<u8>) {
        match self.0 {
            0 => ('p', None),
            1 => ('q', None),
            2 => ('r', None),
            v if v < X_PLAIN => ('r', Some(v - R_BASE)),
            X_PLAIN => ('x', None),
            v if v < Y_PLAIN => ('x', Some(v - X_BASE)),
            Y_PLAIN => ('y', None),
            v => ('y', Some(v - Y_BASE)),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            (c, None) => write!(f, "{c}"),
            (c, Some(i)) => write!(f, "{c}{i}"),
        }
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Variable {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let unknown = || PolyError::UnknownVariable(s.to_string());
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str();
        if rest.is_empty() {
            return match head {
                'p' => Ok(Variable::P),
                'q' => Ok(Variable::Q),
                'r' => Ok(Variable::R),
                'x' => Ok(Variable::X),
                'y' => Ok(Variable::Y),
                _ => Err(unknown()),
            };
        }
        // no sign, no leading zeros: "x01" is not a canonical name
        if !rest.bytes().all(|c| c.is_ascii_digit()) || (rest.len() > 1 && rest.starts_with('0')) {
            return Err(unknown());
        }
        let i: usize = rest.parse().map_err(|_| unknown())?;
        let family = match head {
            'x' => Family::X,
            'y' => Family::Y,
            'r' => Family::R,
            _ => return Err(unknown()),
        };
        Variable::indexed(family, i).map_err(|_| unknown())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use alloc::vec::Vec;

    #[test]
    fn order_matches_names_with_numeric_suffix() {
        let all: Vec<Variable> = Variable::all().collect();
        let key = |v: &Variable| -> (char, i32) {
            let (c, i) = v.parts();
            (c, i.map_or(-1, i32::from))
        };
        for w in all.windows(2) {
            assert!(key(&w[0]) < key(&w[1]), "{:?} {:?}", w[0], w[1]);
        }
        assert!(Variable::r(2).unwrap() < Variable::r(10).unwrap());
        assert_eq!(all.len(), 5 + 3 * MAX_INDEX);
    }

    #[test]
    fn names_round_trip() {
        for v in Variable::all() {
            let name: String = v.to_string();
            assert_eq!(name.parse::<Variable>().unwrap(), v);
        }
        for bad in ["", "z", "x32", "x01", "q1", "x-1", "xy"] {
            assert!(bad.parse::<Variable>().is_err(), "{bad}");
        }
        assert_eq!(Variable::x(32), Err(PolyError::VariableIndex(32)));
    }
}
