//! Binary distance-table files.
//!
//! A 16-byte header
//!
//! | bytes  | field                                            |
//! |--------|--------------------------------------------------|
//! | 0..4   | magic `SPNT`                                     |
//! | 4      | format version (1)                               |
//! | 5, 6   | rows, columns                                    |
//! | 7      | distance field width in bits                     |
//! | 8      | geodesic field width in bits (0 or 2)            |
//! | 9      | reserved, zero                                   |
//! | 10..12 | generator mask, little endian                    |
//! | 12..16 | number of reachable states, little endian        |
//!
//! is followed by one `(distance, geodesics)` record per state in rank
//! order, packed least significant bit first. The all-ones distance marks
//! an unreached state.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::bfs::{DistanceTable, UNSEEN};
use super::rank::state_count;
use crate::board::{BoardDims, GeneratorSet};
use crate::error::{Result, SpinError};

const MAGIC: &[u8; 4] = b"SPNT";
const VERSION: u8 = 1;

/// Header fields of a table file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableHeader {
    pub dims: BoardDims,
    pub gens: GeneratorSet,
    pub dist_bits: u8,
    pub count_bits: u8,
    pub reachable: u32,
}

impl TableHeader {
    fn encode(&self) -> [u8; 16] {
        let mut h = [0u8; 16];
        h[..4].copy_from_slice(MAGIC);
        h[4] = VERSION;
        h[5] = self.dims.rows() as u8;
        h[6] = self.dims.cols() as u8;
        h[7] = self.dist_bits;
        h[8] = self.count_bits;
        h[10..12].copy_from_slice(&self.gens.mask(self.dims).to_le_bytes());
        h[12..16].copy_from_slice(&self.reachable.to_le_bytes());
        h
    }

    fn decode(h: &[u8; 16]) -> Result<Self> {
        let bad = |m: &str| SpinError::TableFormat(m.to_string());
        if &h[..4] != MAGIC {
            return Err(bad("missing SPNT magic"));
        }
        if h[4] != VERSION {
            return Err(bad("unknown format version"));
        }
        let dims = BoardDims::new(h[5] as usize, h[6] as usize)?;
        let (dist_bits, count_bits) = (h[7], h[8]);
        if !(1..=6).contains(&dist_bits) || !matches!(count_bits, 0 | 2) {
            return Err(bad("unsupported field widths"));
        }
        let mask = u16::from_le_bytes([h[10], h[11]]);
        Ok(Self {
            dims,
            gens: GeneratorSet::from_mask(dims, mask),
            dist_bits,
            count_bits,
            reachable: u32::from_le_bytes([h[12], h[13], h[14], h[15]]),
        })
    }

    pub fn read_from(path: impl AsRef<Path>) -> Result<Self> {
        let mut h = [0u8; 16];
        File::open(path)?.read_exact(&mut h)?;
        Self::decode(&h)
    }
}

impl DistanceTable {
    pub fn header(&self) -> TableHeader {
        let reachable = self.codes.iter().filter(|&&c| c & 63 != UNSEEN).count();
        TableHeader {
            dims: self.dims,
            gens: self.gens.clone(),
            dist_bits: self.dist_bits,
            count_bits: if self.tracks_uniqueness { 2 } else { 0 },
            reachable: reachable as u32,
        }
    }

    pub fn write_to<W: Write>(&self, w: W) -> Result<()> {
        let header = self.header();
        let mut w = BufWriter::new(w);
        w.write_all(&header.encode())?;
        let sentinel = (1u64 << header.dist_bits) - 1;
        let width = (header.dist_bits + header.count_bits) as u32;
        let mut acc = 0u64;
        let mut filled = 0u32;
        for &c in &self.codes {
            let d = c & 63;
            let mut record = if d == UNSEEN { sentinel } else { d as u64 };
            if header.count_bits == 2 {
                record |= ((c >> 6) as u64) << header.dist_bits;
            }
            acc |= record << filled;
            filled += width;
            if filled >= 32 {
                w.write_all(&(acc as u32).to_le_bytes())?;
                acc >>= 32;
                filled -= 32;
            }
        }
        let tail = filled.div_ceil(8) as usize;
        w.write_all(&acc.to_le_bytes()[..tail])?;
        w.flush()?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: R) -> Result<Self> {
        let mut r = BufReader::new(r);
        let mut h = [0u8; 16];
        r.read_exact(&mut h)?;
        let header = TableHeader::decode(&h)?;
        let states = state_count(header.dims.cells())? as usize;
        let width = (header.dist_bits + header.count_bits) as u32;
        let mut body = Vec::new();
        r.read_to_end(&mut body)?;
        if body.len() != (states * width as usize).div_ceil(8) {
            return Err(SpinError::TableFormat(
                "body length does not match header".into(),
            ));
        }
        let sentinel = (1u8 << header.dist_bits) - 1;
        let dist_mask = sentinel as u64;
        let mut codes = Vec::with_capacity(states);
        let mut bytes = body.iter();
        let mut acc = 0u64;
        let mut filled = 0u32;
        for _ in 0..states {
            while filled < width {
                acc |= (*bytes.next().unwrap() as u64) << filled;
                filled += 8;
            }
            let record = acc & ((1 << width) - 1);
            acc >>= width;
            filled -= width;
            let d = (record & dist_mask) as u8;
            let count = (record >> header.dist_bits) as u8;
            codes.push(if d == sentinel {
                UNSEEN
            } else {
                d | count << 6
            });
        }
        let table = DistanceTable {
            dims: header.dims,
            gens: header.gens.clone(),
            dist_bits: header.dist_bits,
            tracks_uniqueness: header.count_bits == 2,
            codes,
        };
        if table.header().reachable != header.reachable {
            return Err(SpinError::TableFormat(
                "reachable count does not match body".into(),
            ));
        }
        Ok(table)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        self.write_to(File::create(path)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::read_from(File::open(path)?)
    }

    /// Loads a table and checks that it was built for `dims` and `gens`.
    pub fn load_for(path: impl AsRef<Path>, dims: BoardDims, gens: &GeneratorSet) -> Result<Self> {
        let header = TableHeader::read_from(&path)?;
        if header.dims != dims || header.gens != *gens {
            return Err(SpinError::TableMismatch);
        }
        Self::load(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::SpinType;
    use crate::census::bfs_census;

    #[test]
    fn roundtrip_with_and_without_counts() {
        let dims = BoardDims::new(2, 3).unwrap();
        for track in [true, false] {
            let (table, _) = bfs_census(dims, &GeneratorSet::all(dims), track).unwrap();
            let mut buf = Vec::new();
            table.write_to(&mut buf).unwrap();
            assert_eq!(&buf[..4], b"SPNT");
            let width = 4 + if track { 2 } else { 0 };
            assert_eq!(buf.len(), 16 + (46080 * width as usize).div_ceil(8));
            assert_eq!(DistanceTable::read_from(&buf[..]).unwrap(), table);
        }
    }

    #[test]
    fn unreached_states_survive_a_roundtrip() {
        let dims = BoardDims::new(2, 2).unwrap();
        let gens = GeneratorSet::new([SpinType::new(1, 2)]);
        let (table, _) = bfs_census(dims, &gens, true).unwrap();
        assert_eq!(table.dist_bits(), 5);
        let mut buf = Vec::new();
        table.write_to(&mut buf).unwrap();
        let back = DistanceTable::read_from(&buf[..]).unwrap();
        assert_eq!(back, table);
        assert_eq!(back.header().reachable, 24);
        assert_eq!(back.gens(), &gens);
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let dims = BoardDims::new(1, 3).unwrap();
        let (table, _) = bfs_census(dims, &GeneratorSet::all(dims), true).unwrap();
        let mut buf = Vec::new();
        table.write_to(&mut buf).unwrap();
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(DistanceTable::read_from(&bad[..]).is_err());
        let short = &buf[..buf.len() - 1];
        assert!(DistanceTable::read_from(short).is_err());
    }

    #[test]
    fn load_for_checks_the_key() {
        let dims = BoardDims::new(1, 3).unwrap();
        let (table, _) = bfs_census(dims, &GeneratorSet::all(dims), false).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.spnt");
        table.save(&path).unwrap();
        assert_eq!(
            DistanceTable::load_for(&path, dims, &GeneratorSet::all(dims)).unwrap(),
            table
        );
        let other = GeneratorSet::new([SpinType::new(1, 1), SpinType::new(1, 2)]);
        assert!(matches!(
            DistanceTable::load_for(&path, dims, &other),
            Err(SpinError::TableMismatch)
        ));
    }
}
