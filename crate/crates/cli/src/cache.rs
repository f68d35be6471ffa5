//! On-disk cache of computed polynomials, one JSON file per `(kind, n)`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use braidkl::klcore::check_kl_bounds;
use braidkl::{IntPoly, Integer, KlTable, PolyKind, Provenance};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub kind: String,
    pub n: usize,
    pub coeffs: Vec<String>,
    pub version: String,
}

impl CacheEntry {
    pub fn new(kind: PolyKind, n: usize, poly: &IntPoly) -> Self {
        CacheEntry {
            kind: kind.to_string(),
            n,
            coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Parses and validates the entry back into a polynomial.
    pub fn decode(&self) -> Result<(PolyKind, usize, IntPoly), String> {
        let kind = parse_kind(&self.kind).ok_or_else(|| format!("unknown kind {:?}", self.kind))?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.parse::<Integer>().map_err(|_| format!("bad coefficient {c:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        let poly = IntPoly::from_coeffs(coeffs);
        check_kl_bounds(kind, self.n, &poly).map_err(|e| e.to_string())?;
        let expected = low_coefficients(kind, self.n);
        for (i, want) in expected.iter().enumerate() {
            if &poly.coeff(i) != want {
                return Err(format!("{kind}_B{}: coefficient of t^{i} is {}, expected {want}", self.n, poly.coeff(i)));
            }
        }
        Ok((kind, self.n, poly))
    }
}

/// Coefficients known without the recursion: P has constant term 1 and
/// linear term (#coatoms - #atoms); Q has constant term |mu| = (n-1)!.
fn low_coefficients(kind: PolyKind, n: usize) -> Vec<Integer> {
    match kind {
        PolyKind::P if n >= 4 => {
            let coatoms = (Integer::from(1) << (n - 1)) - 1;
            vec![Integer::from(1), coatoms - Integer::from(n * (n - 1) / 2)]
        }
        PolyKind::P => vec![Integer::from(1)],
        PolyKind::Q => vec![(1..n).map(Integer::from).product()],
    }
}

pub fn parse_kind(s: &str) -> Option<PolyKind> {
    match s {
        "P" => Some(PolyKind::P),
        "Q" => Some(PolyKind::Q),
        _ => None,
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: PolyKind, n: usize) -> PathBuf {
        self.dir.join(format!("{kind}-{n}.json"))
    }

    pub fn read(&self, kind: PolyKind, n: usize) -> Result<Option<IntPoly>, String> {
        let path = self.path(kind, n);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(format!("{}: {e}", path.display())),
        };
        let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let (k, m, poly) = entry.decode().map_err(|e| format!("{}: {e}", path.display()))?;
        if (k, m) != (kind, n) {
            return Err(format!("{} holds {k}_{m}", path.display()));
        }
        Ok(Some(poly))
    }

    pub fn write(&self, kind: PolyKind, n: usize, poly: &IntPoly) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let text = serde_json::to_string(&CacheEntry::new(kind, n, poly)).expect("entries serialize");
        let tmp = self.dir.join(format!(".{kind}-{n}.json.tmp"));
        fs::write(&tmp, text)?;
        fs::rename(tmp, self.path(kind, n))
    }

    /// Loads every readable entry with index `<= max_n` into `table`.
    /// Unreadable entries are reported and skipped.
    pub fn seed(&self, table: &mut KlTable, max_n: usize, warnings: &mut Vec<String>) {
        for kind in [PolyKind::P, PolyKind::Q] {
            for n in 1..=max_n {
                match self.read(kind, n) {
                    Ok(Some(poly)) => {
                        if let Err(e) = table.insert(kind, n, poly, Provenance::Cache) {
                            warnings.push(format!("ignoring cached {kind}_{n}: {e}"));
                        }
                    }
                    Ok(None) => {}
                    Err(e) => warnings.push(format!("ignoring cache entry: {e}")),
                }
            }
        }
    }

    /// Writes every freshly computed entry of `table`.
    pub fn store(&self, table: &KlTable) -> io::Result<usize> {
        let mut written = 0;
        for (kind, n, poly, prov) in table.iter() {
            if prov != Provenance::Cache {
                self.write(kind, n, poly)?;
                written += 1;
            }
        }
        Ok(written)
    }

    /// `(kind, n)` of every entry file, sorted.
    pub fn list(&self) -> io::Result<Vec<(PolyKind, usize)>> {
        let mut out = Vec::new();
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e),
        };
        for entry in entries {
            let name = entry?.file_name();
            let Some(stem) = name.to_str().and_then(|s| s.strip_suffix(".json")) else { continue };
            let Some((k, n)) = stem.split_once('-') else { continue };
            if let (Some(kind), Ok(n)) = (parse_kind(k), n.parse::<usize>()) {
                out.push((kind, n));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every entry file; returns how many were removed.
    pub fn clear(&self) -> io::Result<usize> {
        let list = self.list()?;
        for &(kind, n) in &list {
            fs::remove_file(self.path(kind, n))?;
        }
        Ok(list.len())
    }
}
