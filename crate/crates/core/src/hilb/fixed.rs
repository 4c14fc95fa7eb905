use super::Partition;
use crate::toric::{SurfaceName, ToricSurfaceModel};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Monomial ideal of colength `n`: one partition per toric fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HilbFixedPoint {
    pub assignment: Vec<Partition>,
    pub n: u32,
}

impl HilbFixedPoint {
    pub fn new(assignment: Vec<Partition>) -> Self {
        let n = assignment.iter().map(Partition::size).sum();
        HilbFixedPoint { assignment, n }
    }

    pub fn empty(points: usize) -> Self {
        Self::new(vec![Partition::empty(); points])
    }

    /// A single reduced point at toric fixed point `p`.
    pub fn point(points: usize, p: usize) -> Self {
        let mut a = vec![Partition::empty(); points];
        a[p] = Partition::new(vec![1]);
        Self::new(a)
    }

    pub fn parse(s: &str, points: usize) -> Option<Self> {
        let parts = s.split('/').map(|p| p.parse::<Partition>().ok()).collect::<Option<Vec<_>>>()?;
        (parts.len() == points).then(|| Self::new(parts))
    }
}

impl fmt::Display for HilbFixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.assignment.iter().map(Partition::to_string).collect();
        f.write_str(&s.join("/"))
    }
}

/// Coefficient of `q^n` in `∏ (1 − q^k)^{−chi}`.
pub fn gottsche_coefficient(chi: u32, n: u32) -> BigInt {
    let n = n as usize;
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::one();
    // multiply by 1/(1 − q^k), chi times for each k
    for k in 1..=n {
        for _ in 0..chi {
            for i in k..=n {
                let add = series[i - k].clone();
                series[i] += add;
            }
        }
    }
    series[n].clone()
}

/// Every torus-fixed point of Hilbⁿ(S), sorted by text form.
pub fn hilb_fixed_points(s: &ToricSurfaceModel, n: u32) -> Vec<HilbFixedPoint> {
    let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    fn go(
        slot: usize,
        slots: usize,
        rem: u32,
        by_size: &[Vec<Partition>],
        acc: &mut Vec<Partition>,
        out: &mut Vec<HilbFixedPoint>,
    ) {
        if slot + 1 == slots {
            for p in &by_size[rem as usize] {
                acc.push(p.clone());
                out.push(HilbFixedPoint::new(acc.clone()));
                acc.pop();
            }
            return;
        }
        for k in 0..=rem {
            for p in &by_size[k as usize] {
                acc.push(p.clone());
                go(slot + 1, slots, rem - k, by_size, acc, out);
                acc.pop();
            }
        }
    }
    go(0, s.euler_number, n, &by_size, &mut Vec::new(), &mut out);
    sort_canonical(&mut out);
    out
}

fn sort_canonical(v: &mut [HilbFixedPoint]) {
    v.sort_by_cached_key(|fp| fp.to_string());
}

/// On-disk enumeration cache, one file per `(surface, n)`.
#[derive(Clone, Debug)]
pub struct FixedPointCache {
    dir: PathBuf,
}

impl FixedPointCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        FixedPointCache { dir: dir.into() }
    }

    pub fn path(&self, surface: SurfaceName, n: u32) -> PathBuf {
        self.dir.join(format!("hilb-{surface}-{n}.txt"))
    }

    /// Load if the file is present and fully valid, else enumerate and rewrite.
    pub fn load_or_generate(&self, s: &ToricSurfaceModel, n: u32) -> std::io::Result<(Vec<HilbFixedPoint>, bool)> {
        let path = self.path(s.name, n);
        if let Some(points) = read_cache(&path, s, n) {
            return Ok((points, true));
        }
        let points = hilb_fixed_points(s, n);
        write_cache(&path, s.name, n, &points)?;
        Ok((points, false))
    }
}

fn read_cache(path: &Path, s: &ToricSurfaceModel, n: u32) -> Option<Vec<HilbFixedPoint>> {
    let text = fs::read_to_string(path).ok()?;
    let mut out = Vec::new();
    let mut prev: Option<&str> = None;
    for line in text.lines() {
        if let Some(p) = prev {
            if p >= line {
                return None;
            }
        }
        prev = Some(line);
        let mut f = line.split(' ');
        let (surface, size, tuple) = (f.next()?, f.next()?, f.next()?);
        if f.next().is_some() || surface != s.name.to_string() || size.parse::<u32>().ok()? != n {
            return None;
        }
        let fp = HilbFixedPoint::parse(tuple, s.euler_number)?;
        if fp.n != n {
            return None;
        }
        out.push(fp);
    }
    // distinct valid entries with the right count are exactly the full set
    if BigInt::from(out.len()) != gottsche_coefficient(s.euler_number as u32, n) {
        return None;
    }
    sort_canonical(&mut out);
    Some(out)
}

fn write_cache(path: &Path, surface: SurfaceName, n: u32, points: &[HilbFixedPoint]) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut lines: Vec<String> = points.iter().map(|fp| format!("{surface} {n} {fp}")).collect();
    lines.sort();
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        for l in &lines {
            writeln!(f, "{l}")?;
        }
        f.sync_all()?;
    }
    fs::rename(tmp, path)
}
