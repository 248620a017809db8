//! External sort-merge bucketing: sorted runs of `(fingerprint, graph6)`
//! are written to temporary files and merged with a heap.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Seek, Write};

use super::Sink;
use crate::error::CensusError;

pub(super) struct SpillSink {
    run_records: usize,
    pending: Vec<(u128, Vec<u8>)>,
    runs: Vec<File>,
}

impl SpillSink {
    pub(super) fn new(run_records: usize) -> Self {
        SpillSink { run_records: run_records.max(1), pending: Vec::new(), runs: Vec::new() }
    }

    fn flush(&mut self) -> Result<(), CensusError> {
        if self.pending.is_empty() {
            return Ok(());
        }
        self.pending.sort_unstable();
        let mut file = tempfile::tempfile()?;
        {
            let mut w = BufWriter::new(&mut file);
            for (fp, g6) in self.pending.drain(..) {
                w.write_all(&fp.to_le_bytes())?;
                w.write_all(&(g6.len() as u32).to_le_bytes())?;
                w.write_all(&g6)?;
            }
            w.flush()?;
        }
        file.rewind()?;
        self.runs.push(file);
        Ok(())
    }
}

fn read_entry(r: &mut impl Read) -> std::io::Result<Option<(u128, Vec<u8>)>> {
    let mut fp = [0u8; 16];
    match r.read_exact(&mut fp) {
        Ok(()) => {}
        Err(e) if e.kind() == std::io::ErrorKind::UnexpectedEof => return Ok(None),
        Err(e) => return Err(e),
    }
    let mut len = [0u8; 4];
    r.read_exact(&mut len)?;
    let mut g6 = vec![0u8; u32::from_le_bytes(len) as usize];
    r.read_exact(&mut g6)?;
    Ok(Some((u128::from_le_bytes(fp), g6)))
}

impl Sink for SpillSink {
    fn absorb(&mut self, keys: &[u128], records: &[(usize, Vec<u8>)]) -> Result<(), CensusError> {
        for (&fp, (_, g6)) in keys.iter().zip(records) {
            self.pending.push((fp, g6.clone()));
            if self.pending.len() >= self.run_records {
                self.flush()?;
            }
        }
        Ok(())
    }

    fn buckets(
        &mut self,
        f: &mut dyn FnMut(Vec<Vec<u8>>) -> Result<(), CensusError>,
    ) -> Result<(), CensusError> {
        self.flush()?;
        let mut readers: Vec<BufReader<File>> = self.runs.drain(..).map(BufReader::new).collect();
        let mut heap = BinaryHeap::new();
        for (i, r) in readers.iter_mut().enumerate() {
            if let Some((fp, g6)) = read_entry(r)? {
                heap.push(Reverse((fp, g6, i)));
            }
        }
        let mut current: Option<u128> = None;
        let mut bucket = Vec::new();
        while let Some(Reverse((fp, g6, i))) = heap.pop() {
            if current != Some(fp) && !bucket.is_empty() {
                f(std::mem::take(&mut bucket))?;
            }
            current = Some(fp);
            bucket.push(g6);
            if let Some((fp, g6)) = read_entry(&mut readers[i])? {
                heap.push(Reverse((fp, g6, i)));
            }
        }
        if !bucket.is_empty() {
            f(bucket)?;
        }
        Ok(())
    }
}
