//! On-disk P/N tables.
//!
//! Layout (integers little-endian):
//!
//! | bytes | content |
//! |---|---|
//! | 4 | magic `WYPN` |
//! | 2 | format version |
//! | 1 | variant `K` or `W` |
//! | 4 | `ℓ` or `k` |
//! | 4 | bound `B` |
//! | ⌈(B+1)²/8⌉ | classification, row-major (`y` outer, `x` inner), bit set for P, LSB first |
//! | 32 | SHA-256 of everything above |

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use super::{solve, GameSpec, PnTable, SolveError};

pub const MAGIC: &[u8; 4] = b"WYPN";
pub const VERSION: u16 = 1;
const HEADER_LEN: usize = 4 + 2 + 1 + 4 + 4;
const CHECKSUM_LEN: usize = 32;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("not a P/N table file")]
    Magic,
    #[error("unsupported format version {0}")]
    Version(u16),
    #[error("bad game header: variant {variant:?}, parameter {param}")]
    Spec { variant: char, param: u32 },
    #[error("file is {found} bytes, expected {expected}")]
    Length { found: usize, expected: usize },
    #[error("checksum mismatch")]
    Checksum,
    #[error("classification is not symmetric at ({x}, {y})")]
    Asymmetric { x: u64, y: u64 },
    #[error("bound {0} does not fit the format")]
    BoundTooLarge(u64),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

fn payload_len(bound: u64) -> usize {
    let cells = (bound + 1) * (bound + 1);
    cells.div_ceil(8) as usize
}

pub fn encode(table: &PnTable) -> Result<Vec<u8>, CacheError> {
    let bound = table.bound();
    let bound32 = u32::try_from(bound).map_err(|_| CacheError::BoundTooLarge(bound))?;
    let spec = table.spec();
    let mut out = Vec::with_capacity(HEADER_LEN + payload_len(bound) + CHECKSUM_LEN);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.push(spec.variant_char() as u8);
    out.extend_from_slice(&spec.param().to_le_bytes());
    out.extend_from_slice(&bound32.to_le_bytes());

    let mut byte = 0u8;
    let mut used = 0;
    for y in 0..=bound {
        for x in 0..=bound {
            if table.is_p(x, y) {
                byte |= 1 << used;
            }
            used += 1;
            if used == 8 {
                out.push(byte);
                byte = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(byte);
    }
    let sum = Sha256::digest(&out);
    out.extend_from_slice(&sum);
    Ok(out)
}

/// Header fields without validating the payload.
pub fn peek(bytes: &[u8]) -> Result<(GameSpec, u64), CacheError> {
    if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
        return Err(CacheError::Magic);
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != VERSION {
        return Err(CacheError::Version(version));
    }
    let variant = bytes[6] as char;
    let param = u32::from_le_bytes(bytes[7..11].try_into().unwrap());
    let bound = u64::from(u32::from_le_bytes(bytes[11..15].try_into().unwrap()));
    let spec = match variant {
        'K' => GameSpec::terminal(param),
        'W' => GameSpec::blocking(param).map_err(|_| CacheError::Spec { variant, param })?,
        _ => return Err(CacheError::Spec { variant, param }),
    };
    Ok((spec, bound))
}

pub fn decode(bytes: &[u8]) -> Result<PnTable, CacheError> {
    let (spec, bound) = peek(bytes)?;
    let expected = HEADER_LEN + payload_len(bound) + CHECKSUM_LEN;
    if bytes.len() != expected {
        return Err(CacheError::Length {
            found: bytes.len(),
            expected,
        });
    }
    let (body, sum) = bytes.split_at(expected - CHECKSUM_LEN);
    if Sha256::digest(body).as_slice() != sum {
        return Err(CacheError::Checksum);
    }
    let payload = &body[HEADER_LEN..];
    let side = bound + 1;
    let bit = |x: u64, y: u64| {
        let i = (y * side + x) as usize;
        payload[i / 8] >> (i % 8) & 1 == 1
    };
    for y in 0..=bound {
        for x in 0..y {
            if bit(x, y) != bit(y, x) {
                return Err(CacheError::Asymmetric { x, y });
            }
        }
    }
    Ok(PnTable::from_fn(spec, bound, bit))
}

pub fn write_to(table: &PnTable, mut w: impl Write) -> Result<(), CacheError> {
    w.write_all(&encode(table)?)?;
    Ok(())
}

pub fn read_from(mut r: impl Read) -> Result<PnTable, CacheError> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    decode(&bytes)
}

pub fn save(table: &PnTable, path: impl AsRef<Path>) -> Result<(), CacheError> {
    fs::write(path, encode(table)?)?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>) -> Result<PnTable, CacheError> {
    decode(&fs::read(path)?)
}

/// Loads `path` when it holds a valid table for `spec` and `bound`;
/// otherwise solves and rewrites it.
pub fn solve_cached(
    spec: GameSpec,
    bound: u64,
    path: impl AsRef<Path>,
) -> Result<PnTable, CacheError> {
    let path = path.as_ref();
    if let Ok(bytes) = fs::read(path) {
        if matches!(peek(&bytes), Ok(h) if h == (spec, bound)) {
            if let Ok(t) = decode(&bytes) {
                return Ok(t);
            }
        }
    }
    let t = solve(spec, bound)?;
    save(&t, path)?;
    Ok(t)
}
