//! Parameter grids: Cartesian products of ranges, or seeded random draws.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Complex;
use crate::error::{Error, Result};

use super::{literal, IdentityEntry, ParamSpec, Point};

/// `n` equally spaced values from `lo` to `hi` inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: String,
    pub lo: Complex,
    pub hi: Complex,
    pub n: usize,
}

impl Axis {
    /// Parses `name=lo:hi:n`; `lo` and `hi` are complex literals.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("grid axis {s:?} is not of the form name=lo:hi:n"));
        let (name, range) = s.split_once('=').ok_or_else(bad)?;
        let parts: Vec<_> = range.split(':').collect();
        let [lo, hi, n] = parts[..] else { return Err(bad()) };
        let name = name.trim();
        if name.is_empty() {
            return Err(bad());
        }
        Ok(Self {
            name: name.to_string(),
            lo: literal::parse(lo)?,
            hi: literal::parse(hi)?,
            n: n.trim().parse().map_err(|_| bad())?,
        })
    }

    pub fn values(&self) -> Vec<Complex> {
        match self.n {
            0 => vec![],
            1 => vec![self.lo],
            n => (0..n)
                .map(|k| self.lo + (self.hi - self.lo) * (k as f64 / (n - 1) as f64))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomDraws {
    pub count: usize,
    pub seed: u64,
}

/// Which points a sweep visits.
///
/// Without `random` the points are the Cartesian product of `axes` (first
/// axis slowest) with `fixed` supplying every other parameter. With `random`,
/// each draw takes `fixed` values as given, draws axis parameters uniformly
/// between their bounds and the rest from the entry's own boxes, and is
/// redrawn until the entry's constraints hold.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridSpec {
    pub axes: Vec<Axis>,
    pub fixed: Point,
    pub random: Option<RandomDraws>,
}

/// Redraws allowed per random point before an inadmissible one is kept.
const MAX_REDRAWS: usize = 1000;

impl GridSpec {
    pub fn axis(mut self, name: &str, lo: Complex, hi: Complex, n: usize) -> Self {
        self.axes.push(Axis { name: name.into(), lo, hi, n });
        self
    }

    pub fn fixed(mut self, name: &str, value: Complex) -> Self {
        self.fixed.insert(name.into(), value);
        self
    }

    pub fn random(mut self, count: usize, seed: u64) -> Self {
        self.random = Some(RandomDraws { count, seed });
        self
    }

    fn check_names(&self, entry: &IdentityEntry) -> Result<()> {
        let names = entry.param_names();
        for name in self.axes.iter().map(|a| a.name.as_str()).chain(self.fixed.keys().map(String::as_str)) {
            if !names.contains(&name) {
                return Err(Error::InvalidParameter(format!(
                    "{}: unknown parameter {name:?}; expected {names:?}",
                    entry.id
                )));
            }
        }
        for (i, a) in self.axes.iter().enumerate() {
            if self.fixed.contains_key(&a.name) || self.axes[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidParameter(format!("parameter {:?} is assigned twice", a.name)));
            }
        }
        Ok(())
    }

    /// The points of the sweep, in order.
    pub fn points(&self, entry: &IdentityEntry) -> Result<Vec<Point>> {
        self.check_names(entry)?;
        match self.random {
            Some(draws) => Ok(self.random_points(entry, draws)),
            None => self.product(entry),
        }
    }

    fn product(&self, entry: &IdentityEntry) -> Result<Vec<Point>> {
        let missing: Vec<_> = entry
            .param_names()
            .into_iter()
            .filter(|n| !self.fixed.contains_key(*n) && !self.axes.iter().any(|a| a.name == *n))
            .collect();
        if !missing.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "{}: no value or range for {missing:?}",
                entry.id
            )));
        }
        let mut points = vec![self.fixed.clone()];
        for axis in &self.axes {
            let values = axis.values();
            points = points
                .iter()
                .flat_map(|p| {
                    values.iter().map(move |&z| {
                        let mut q = p.clone();
                        q.insert(axis.name.clone(), z);
                        q
                    })
                })
                .collect();
        }
        Ok(points)
    }

    fn random_points(&self, entry: &IdentityEntry, draws: RandomDraws) -> Vec<Point> {
        let mut rng = ChaCha8Rng::seed_from_u64(draws.seed);
        (0..draws.count)
            .map(|_| {
                let mut p = self.draw(entry, &mut rng);
                for _ in 1..MAX_REDRAWS {
                    if (entry.constraints)(&p).is_ok() {
                        break;
                    }
                    p = self.draw(entry, &mut rng);
                }
                p
            })
            .collect()
    }

    fn draw(&self, entry: &IdentityEntry, rng: &mut ChaCha8Rng) -> Point {
        entry
            .params
            .iter()
            .map(|spec| {
                let z = if let Some(&z) = self.fixed.get(spec.name) {
                    z
                } else if let Some(a) = self.axes.iter().find(|a| a.name == spec.name) {
                    let t: f64 = rng.random();
                    let s: f64 = rng.random();
                    Complex::new(a.lo.re + t * (a.hi.re - a.lo.re), a.lo.im + s * (a.hi.im - a.lo.im))
                } else {
                    draw_spec(spec, rng)
                };
                (spec.name.to_string(), z)
            })
            .collect()
    }
}

fn uniform(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.random_range(lo..hi)
    }
}

fn draw_spec(spec: &ParamSpec, rng: &mut ChaCha8Rng) -> Complex {
    if spec.integer {
        let (lo, hi) = (spec.re.0 as i64, spec.re.1 as i64);
        return Complex::new(rng.random_range(lo..=hi) as f64, 0.0);
    }
    Complex::new(uniform(rng, spec.re), uniform(rng, spec.im))
}
