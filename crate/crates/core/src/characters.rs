//! Irreducible characters of the symmetric groups.
//!
//! Values are computed by the Murnaghan–Nakayama rule on beta-sets, removing
//! the largest cycle first and memoizing on `(shape, remaining cycle type)`.
//! Whole tables are built once per degree and shared through a process-wide
//! registry, optionally backed by a JSON-lines cache on disk (see
//! [`CACHE_DIR_ENV`]).

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{Rational, Ring};
use crate::partitions::{enumerate, factorial, index_of, Partition};

/// Environment variable naming the on-disk character-table cache directory.
pub const CACHE_DIR_ENV: &str = "HODGE_CACHE_DIR";

const CACHE_FORMAT: u32 = 1;

/// Full character table of `S_d`, rows indexed by irreducibles `ν` and
/// columns by classes `μ`, both in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    d: usize,
    basis: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(d: usize) -> Self {
        let basis = enumerate(d);
        let mut memo = HashMap::new();
        let values = basis
            .iter()
            .map(|nu| basis.iter().map(|mu| mn_memo(nu, mu.parts(), &mut memo)).collect())
            .collect();
        CharacterTable { d, basis, values }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn value(&self, nu: &Partition, mu: &Partition) -> Option<i64> {
        let i = index_of(&self.basis, nu)?;
        let j = index_of(&self.basis, mu)?;
        Some(self.values[i][j])
    }

    /// Row of `ν`: `χ_ν(C_μ)` for `μ` in basis order.
    pub fn row(&self, nu: &Partition) -> Option<&[i64]> {
        index_of(&self.basis, nu).map(|i| self.values[i].as_slice())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.values
    }

    /// Load a table from `dir`, returning `None` for any missing, stale or
    /// malformed file.
    pub fn load(dir: &Path, d: usize) -> Option<Self> {
        let file = fs::File::open(cache_path(dir, d)).ok()?;
        let mut lines = BufReader::new(file).lines();
        let header: CacheHeader = serde_json::from_str(&lines.next()?.ok()?).ok()?;
        if header.format != CACHE_FORMAT || header.d != d {
            return None;
        }
        let basis = enumerate(d);
        let n = basis.len();
        let mut values = vec![vec![None; n]; n];
        for line in lines {
            let entry: CacheEntry = serde_json::from_str(&line.ok()?).ok()?;
            let i = index_of(&basis, &entry.nu)?;
            let j = index_of(&basis, &entry.mu)?;
            values[i][j] = Some(entry.chi.parse::<i64>().ok()?);
        }
        let values = values.into_iter().map(|row| row.into_iter().collect::<Option<Vec<_>>>()).collect::<Option<Vec<_>>>()?;
        Some(CharacterTable { d, basis, values })
    }

    /// Write the table to `dir` atomically (temp file then rename).
    pub fn store(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let target = cache_path(dir, self.d);
        let tmp = target.with_extension(format!("jsonl.tmp{}", std::process::id()));
        {
            let mut out = std::io::BufWriter::new(fs::File::create(&tmp)?);
            writeln!(out, "{}", serde_json::to_string(&CacheHeader { format: CACHE_FORMAT, d: self.d })?)?;
            for (nu, row) in self.basis.iter().zip(&self.values) {
                for (mu, chi) in self.basis.iter().zip(row) {
                    let entry = CacheEntry { nu: nu.clone(), mu: mu.clone(), chi: chi.to_string() };
                    writeln!(out, "{}", serde_json::to_string(&entry)?)?;
                }
            }
            out.flush()?;
        }
        fs::rename(tmp, target)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheHeader {
    format: u32,
    d: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    nu: Partition,
    mu: Partition,
    chi: String,
}

fn cache_path(dir: &Path, d: usize) -> PathBuf {
    dir.join(format!("characters_d{d}.jsonl"))
}

fn registry() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared character table of `S_d`, consulting the disk cache named by
/// `HODGE_CACHE_DIR` when set. Cache problems fall back to recomputation.
pub fn table(d: usize) -> Arc<CharacterTable> {
    let mut tables = registry().lock().expect("character registry poisoned");
    if let Some(t) = tables.get(&d) {
        return Arc::clone(t);
    }
    let dir = std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from);
    let t = match dir.as_deref().and_then(|dir| CharacterTable::load(dir, d)) {
        Some(t) => t,
        None => {
            let t = CharacterTable::compute(d);
            if let Some(dir) = dir.as_deref() {
                // A read-only or missing cache directory is not an error.
                let _ = t.store(dir);
            }
            t
        }
    };
    let t = Arc::new(t);
    tables.insert(d, Arc::clone(&t));
    t
}

/// `χ_ν(C_μ)`.
pub fn chi(nu: &Partition, mu: &Partition) -> Result<i64> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: nu.to_string(),
            left_size: nu.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(table(nu.size()).value(nu, mu).expect("partitions of equal size are in the table"))
}

/// `dim R_ν = |ν|! / Π hooks`, computed independently of the character table.
pub fn dim(nu: &Partition) -> u128 {
    let hooks: u128 = nu.hooks().iter().map(|&h| h as u128).product();
    factorial(nu.size()) / hooks
}

/// Size of the conjugacy class `C_μ`, `|μ|!/z_μ`.
pub fn class_size(mu: &Partition) -> u128 {
    factorial(mu.size()) / mu.z()
}

/// Central character of the transposition class, `|C_(2)| χ_ν(C_(2)) / dim R_ν`.
/// Zero when `|ν| < 2`, where the class is empty.
pub fn f2(nu: &Partition) -> Rational {
    let d = nu.size();
    if d < 2 {
        return Rational::zero();
    }
    let mut parts = vec![2];
    parts.extend(std::iter::repeat_n(1, d - 2));
    let transposition = Partition::new(parts).expect("valid cycle type");
    let chi = chi(nu, &transposition).expect("same size");
    let size = class_size(&transposition) as i64;
    Rational::new(size * chi, dim(nu) as i64)
}

/// Beta-set of `ν` padded to `len` entries: `ν_i + len − i`.
fn beta_set(nu: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| nu.part(i) + len - 1 - i).collect()
}

fn from_beta_set(beta: &[usize]) -> Partition {
    let len = beta.len();
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<usize> = sorted.iter().enumerate().map(|(i, b)| b - (len - 1 - i)).filter(|&p| p > 0).collect();
    Partition::new(parts).expect("beta-set yields a partition")
}

/// Rim hooks of length `k`: each result is the remaining shape with the
/// sign `(−1)^{height}`.
pub fn remove_rim_hooks(nu: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = nu.len();
    let beta = beta_set(nu, len);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((from_beta_set(&next), sign));
    }
    out
}

type Memo = HashMap<(Partition, Vec<usize>), i64>;

fn mn_memo(nu: &Partition, cycles: &[usize], memo: &mut Memo) -> i64 {
    if cycles.is_empty() {
        return if nu.is_empty() { 1 } else { 0 };
    }
    let key = (nu.clone(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // `cycles` is weakly decreasing, so the first entry is the largest cycle.
    let k = cycles[0];
    let rest = &cycles[1..];
    let value = remove_rim_hooks(nu, k).into_iter().map(|(shape, sign)| sign * mn_memo(&shape, rest, memo)).sum();
    memo.insert(key, value);
    value
}

/// Unmemoized Murnaghan–Nakayama with cycles removed in the given order.
/// The order must not affect the value; this exists to check that.
pub fn chi_with_cycle_order(nu: &Partition, cycles: &[usize]) -> i64 {
    match cycles.split_first() {
        None => i64::from(nu.is_empty()),
        Some((&k, rest)) => {
            remove_rim_hooks(nu, k).into_iter().map(|(shape, sign)| sign * chi_with_cycle_order(&shape, rest)).sum()
        }
    }
}
