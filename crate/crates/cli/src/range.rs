use std::fmt;
use std::str::FromStr;

/// An inclusive integer range written `a`, `a..b` or `a..=b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub start: u64,
    pub end: u64,
}

impl ParamRange {
    pub fn single(v: u64) -> Self {
        ParamRange { start: v, end: v }
    }

    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }

    pub fn count(self) -> u64 {
        self.end - self.start + 1
    }
}

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("invalid bound `{t}` in range `{s}`"));
        let (start, end) = match s.split_once("..") {
            None => {
                let v = num(s)?;
                (v, v)
            }
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        };
        if start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(ParamRange { start, end })
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}
