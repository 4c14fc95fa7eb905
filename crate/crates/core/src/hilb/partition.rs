use std::fmt;
use std::str::FromStr;

/// Young diagram; box `(i, j)` has row `i < parts.len()` and column `j < parts[i]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Panics unless `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(Self::valid(&parts), "not a partition: {parts:?}");
        Partition { parts }
    }

    pub fn valid(parts: &[u32]) -> bool {
        parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i`, zero past the end.
    pub fn row(&self, i: i64) -> i64 {
        if i < 0 {
            return 0;
        }
        self.parts.get(i as usize).map_or(0, |&p| p as i64)
    }

    /// Length of column `j`.
    pub fn col(&self, j: i64) -> i64 {
        if j < 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p as i64 > j).count() as i64
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        i >= 0 && j >= 0 && j < self.row(i)
    }

    /// Boxes to the right of `(i, j)` in this diagram; negative outside it.
    pub fn arm(&self, i: i64, j: i64) -> i64 {
        self.row(i) - j - 1
    }

    /// Boxes below `(i, j)` in this diagram; negative outside it.
    pub fn leg(&self, i: i64, j: i64) -> i64 {
        self.col(j) - i - 1
    }

    pub fn boxes(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as i64).map(move |j| (i as i64, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.parts.first().copied().unwrap_or(0) as i64;
        Partition { parts: (0..w).map(|j| self.col(j) as u32).collect() }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rem: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                acc.push(p);
                go(rem - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.parse::<u32>().map_err(|e| format!("bad part {p:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        if !Self::valid(&parts) {
            return Err(format!("not a partition: {s}"));
        }
        Ok(Partition { parts })
    }
}
