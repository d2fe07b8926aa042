//! Line-delimited JSON cache of irreducible records.
//!
//! The first line is a header naming the largest side covered; each further
//! line is one record:
//!
//! ```text
//! {"format":"regtet-irreducible","version":1,"n_max":9}
//! {"d":1,"k":1,"m":1,"n_pair":[0,1],"cube":1,"vertices":[[0,0,0],[0,1,1],[1,0,1],[1,1,0]],"solution":[1,1,1,1]}
//! ```
//!
//! `m` is the side multiplier `λ = d·k`. Every loaded record is re-verified.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::facegen::{enclosing_cube, is_regular, LatticePoint, Tetra};
use crate::numtheory::{MNPair, PrimitiveSolution};
use crate::orbits::class_key;
use crate::pipeline::{self, IrreducibleRecord};

pub const FORMAT: &str = "regtet-irreducible";
pub const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("corrupt cache line {line}: {reason}")]
    Corrupt { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    n_max: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Line {
    d: i64,
    k: i64,
    m: i64,
    n_pair: [i64; 2],
    cube: i64,
    vertices: [[i64; 3]; 4],
    solution: [i64; 4],
}

impl From<&IrreducibleRecord> for Line {
    fn from(r: &IrreducibleRecord) -> Self {
        let s = r.source;
        Line {
            d: r.d,
            k: r.k,
            m: r.side(),
            n_pair: [r.mn.m, r.mn.n],
            cube: r.m_cube,
            vertices: r.tetra.vertices().map(|p| p.coords()),
            solution: [s.a, s.b, s.c, s.d],
        }
    }
}

impl Line {
    fn into_record(self) -> Result<IrreducibleRecord, String> {
        let [a, b, c, d] = self.solution;
        let source = PrimitiveSolution::new(a, b, c, d).ok_or_else(|| {
            format!(
                "{:?} is not a positive ordered primitive solution",
                self.solution
            )
        })?;
        if d != self.d {
            return Err(format!("solution d = {d} but record d = {}", self.d));
        }
        let mn = MNPair::new(self.n_pair[0], self.n_pair[1]);
        if mn.norm() != self.k * self.k {
            return Err(format!(
                "n_pair {:?} does not have norm k² = {}",
                self.n_pair,
                self.k * self.k
            ));
        }
        if self.m != self.d * self.k {
            return Err(format!("m = {} but d·k = {}", self.m, self.d * self.k));
        }
        let points = self.vertices.map(LatticePoint::from);
        let tetra = Tetra::from_points(points);
        if tetra.vertices() != &points {
            return Err("vertices are not sorted".into());
        }
        if class_key(&tetra) != tetra {
            return Err("vertices are not the class representative".into());
        }
        if is_regular(&points) != Some(self.m) {
            return Err(format!(
                "vertices do not form a regular tetrahedron of side {}√2",
                self.m
            ));
        }
        if tetra.edge_content() != 1 {
            return Err("tetrahedron is a dilation".into());
        }
        if enclosing_cube(&tetra) != self.cube {
            return Err(format!(
                "cube = {} but vertices need {}",
                self.cube,
                enclosing_cube(&tetra)
            ));
        }
        Ok(IrreducibleRecord {
            d: self.d,
            k: self.k,
            mn,
            m_cube: self.cube,
            tetra,
            source,
        })
    }
}

/// A loaded cache: every record with side up to `n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    pub n_max: u32,
    pub records: Vec<IrreducibleRecord>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CacheError + '_ {
    move |source| CacheError::Io {
        path: path.display().to_string(),
        source,
    }
}

pub fn load(path: &Path) -> Result<Cache, CacheError> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    let mut lines = BufReader::new(file).lines();
    let corrupt = |line, reason: String| CacheError::Corrupt { line, reason };

    let first = lines
        .next()
        .ok_or_else(|| corrupt(1, "empty file".into()))?
        .map_err(io_err(path))?;
    let header: Header = serde_json::from_str(&first).map_err(|e| corrupt(1, e.to_string()))?;
    if header.format != FORMAT || header.version != VERSION {
        return Err(corrupt(
            1,
            format!("unsupported format {} v{}", header.format, header.version),
        ));
    }

    let mut records = Vec::new();
    for (idx, line) in lines.enumerate() {
        let number = idx + 2;
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: Line =
            serde_json::from_str(&line).map_err(|e| corrupt(number, e.to_string()))?;
        let record = parsed.into_record().map_err(|r| corrupt(number, r))?;
        if record.side() > header.n_max as i64 {
            return Err(corrupt(
                number,
                format!("side {} exceeds header n_max", record.side()),
            ));
        }
        records.push(record);
    }
    records.sort_by_key(|r| (r.side(), r.tetra));
    if records.windows(2).any(|w| w[0].tetra == w[1].tetra) {
        return Err(corrupt(0, "duplicate records".into()));
    }
    Ok(Cache {
        n_max: header.n_max,
        records,
    })
}

pub fn save(path: &Path, cache: &Cache) -> Result<(), CacheError> {
    let file = fs::File::create(path).map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    let header = Header {
        format: FORMAT.into(),
        version: VERSION,
        n_max: cache.n_max,
    };
    let write_json = |out: &mut BufWriter<fs::File>, s: String| writeln!(out, "{s}");
    write_json(
        &mut out,
        serde_json::to_string(&header).expect("header serializes"),
    )
    .map_err(io_err(path))?;
    for r in &cache.records {
        let line = serde_json::to_string(&Line::from(r)).expect("record serializes");
        write_json(&mut out, line).map_err(io_err(path))?;
    }
    out.flush().map_err(io_err(path))
}

/// Records covering `n_max`, reusing and extending the cache at `path`.
/// A missing file is created; a corrupt one is reported, never overwritten.
pub fn load_or_build(path: &Path, n_max: u32) -> pipeline::Result<Vec<IrreducibleRecord>> {
    let existing = if path.exists() {
        Some(load(path)?)
    } else {
        None
    };
    match existing {
        Some(cache) if cache.n_max >= n_max => Ok(cache.records),
        Some(cache) => {
            let records = pipeline::extend_list(cache.records, cache.n_max, n_max)?;
            let grown = Cache { n_max, records };
            save(path, &grown)?;
            Ok(grown.records)
        }
        None => {
            let records = pipeline::irreducible_list(n_max)?;
            let fresh = Cache { n_max, records };
            save(path, &fresh)?;
            Ok(fresh.records)
        }
    }
}
