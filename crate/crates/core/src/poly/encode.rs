//! Stable byte encoding of a [`BiPolyZ`] and its 128-bit fingerprint.
//!
//! Layout (version 1):
//!
//! ```text
//! "AP" 0x01                      magic and version
//! varint n                       x-degree
//! for j in 0..=n:
//!     varint len_j               number of alpha-coefficients (trailing zeros trimmed)
//!     len_j integers, alpha^0 first, each as
//!         varint (bytes << 1 | negative)
//!         magnitude, big-endian, minimal (no bytes for zero)
//! ```
//!
//! Varints are unsigned LEB128. Every field is length-prefixed, so the
//! encoding is injective. The fingerprint is XXH3-128 over these bytes.

use num_bigint::{BigInt, Sign};
use xxhash_rust::xxh3::xxh3_128;

use super::{BiPolyZ, UniPolyZ};
use crate::error::PolyError;

const MAGIC: &[u8; 3] = b"AP\x01";

/// Incremental writer, so callers holding machine-word coefficients
/// produce the same bytes as the arbitrary-precision path.
#[derive(Default)]
pub struct Encoder {
    buf: Vec<u8>,
}

impl Encoder {
    pub fn new(n: usize) -> Self {
        let mut e = Encoder { buf: Vec::with_capacity(64 + 8 * n * n) };
        e.reset(n);
        e
    }

    pub fn reset(&mut self, n: usize) {
        self.buf.clear();
        self.buf.extend_from_slice(MAGIC);
        self.varint(n as u64);
    }

    fn varint(&mut self, mut v: u64) {
        loop {
            let b = (v & 0x7f) as u8;
            v >>= 7;
            if v == 0 {
                self.buf.push(b);
                return;
            }
            self.buf.push(b | 0x80);
        }
    }

    pub fn begin_coeff(&mut self, len: usize) {
        self.varint(len as u64);
    }

    pub fn push_i128(&mut self, v: i128) {
        let mag = v.unsigned_abs().to_be_bytes();
        let skip = mag.iter().take_while(|&&b| b == 0).count();
        let bytes = &mag[skip..];
        self.varint(((bytes.len() as u64) << 1) | (v < 0) as u64);
        self.buf.extend_from_slice(bytes);
    }

    pub fn push_bigint(&mut self, v: &BigInt) {
        let (sign, mag) = v.to_bytes_be();
        if sign == Sign::NoSign {
            self.varint(0);
            return;
        }
        self.varint(((mag.len() as u64) << 1) | (sign == Sign::Minus) as u64);
        self.buf.extend_from_slice(&mag);
    }

    pub fn bytes(&self) -> &[u8] {
        &self.buf
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.buf
    }
}

pub fn canonical_encode(p: &BiPolyZ) -> Vec<u8> {
    let mut e = Encoder::new(p.n());
    for c in p.coeffs() {
        e.begin_coeff(c.coeffs().len());
        for v in c.coeffs() {
            e.push_bigint(v);
        }
    }
    e.into_bytes()
}

pub fn fingerprint_bytes(encoded: &[u8]) -> u128 {
    xxh3_128(encoded)
}

pub fn fingerprint(p: &BiPolyZ) -> u128 {
    fingerprint_bytes(&canonical_encode(p))
}

pub fn canonical_decode(bytes: &[u8]) -> Result<BiPolyZ, PolyError> {
    let mut r = Reader { b: bytes, i: 0 };
    if bytes.get(..3) != Some(MAGIC.as_slice()) {
        return Err(PolyError::Encoding(0));
    }
    r.i = 3;
    let n = r.varint()? as usize;
    if n > 4096 {
        return Err(PolyError::Encoding(3));
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        let len = r.varint()? as usize;
        if len > bytes.len() {
            return Err(PolyError::Encoding(r.i));
        }
        let mut c = Vec::with_capacity(len);
        for _ in 0..len {
            let head = r.varint()?;
            let nbytes = (head >> 1) as usize;
            let at = r.i;
            let mag = bytes.get(at..at + nbytes).ok_or(PolyError::Encoding(at))?;
            if nbytes > 0 && mag[0] == 0 || nbytes == 0 && head & 1 == 1 {
                return Err(PolyError::Encoding(at));
            }
            r.i += nbytes;
            let sign = match (nbytes, head & 1) {
                (0, _) => Sign::NoSign,
                (_, 1) => Sign::Minus,
                _ => Sign::Plus,
            };
            c.push(BigInt::from_bytes_be(sign, mag));
        }
        let poly = UniPolyZ::new(c);
        if poly.coeffs().len() != len {
            return Err(PolyError::Encoding(r.i));
        }
        coeffs.push(poly);
    }
    if r.i != bytes.len() {
        return Err(PolyError::Encoding(r.i));
    }
    Ok(BiPolyZ::new(coeffs))
}

struct Reader<'a> {
    b: &'a [u8],
    i: usize,
}

impl Reader<'_> {
    fn varint(&mut self) -> Result<u64, PolyError> {
        let mut v = 0u64;
        for shift in (0..64).step_by(7) {
            let byte = *self.b.get(self.i).ok_or(PolyError::Encoding(self.i))?;
            self.i += 1;
            v |= ((byte & 0x7f) as u64) << shift;
            if byte & 0x80 == 0 {
                return Ok(v);
            }
        }
        Err(PolyError::Encoding(self.i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k2() -> BiPolyZ {
        BiPolyZ::new(vec![
            UniPolyZ::from_i64(&[1]),
            UniPolyZ::from_i64(&[0, -2]),
            UniPolyZ::from_i64(&[-1, 2]),
        ])
    }

    fn two_k1() -> BiPolyZ {
        BiPolyZ::new(vec![UniPolyZ::from_i64(&[1]), UniPolyZ::default(), UniPolyZ::default()])
    }

    #[test]
    fn layout_of_k2() {
        let bytes = canonical_encode(&k2());
        assert_eq!(
            bytes,
            vec![b'A', b'P', 1, 2, 1, 2, 1, 2, 0, 3, 2, 2, 3, 1, 2, 2]
        );
        assert_ne!(bytes, canonical_encode(&two_k1()));
        assert_ne!(fingerprint(&k2()), fingerprint(&two_k1()));
    }

    #[test]
    fn fingerprint_is_stable() {
        // pinned so a change in hash or layout is noticed
        assert_eq!(fingerprint(&k2()), fingerprint_bytes(&[b'A', b'P', 1, 2, 1, 2, 1, 2, 0, 3, 2, 2, 3, 1, 2, 2]));
        assert_eq!(fingerprint(&k2()), 0xe49b_c2c0_a1ef_d7d5_00d1_92a6_df78_176e);
    }

    #[test]
    fn rejects_garbage() {
        assert!(canonical_decode(b"").is_err());
        assert!(canonical_decode(b"AP\x02\x00").is_err());
        let mut bytes = canonical_encode(&k2());
        bytes.push(0);
        assert!(canonical_decode(&bytes).is_err());
        bytes.truncate(bytes.len() - 3);
        assert!(canonical_decode(&bytes).is_err());
    }

    fn bipoly() -> impl Strategy<Value = BiPolyZ> {
        prop::collection::vec(
            prop::collection::vec(any::<i128>(), 0..5)
                .prop_map(|v| UniPolyZ::new(v.into_iter().map(BigInt::from).collect())),
            1..6,
        )
        .prop_map(BiPolyZ::new)
    }

    proptest! {
        #[test]
        fn decode_inverts_encode(p in bipoly()) {
            prop_assert_eq!(canonical_decode(&canonical_encode(&p)).unwrap(), p);
        }

        #[test]
        fn machine_word_path_matches(vals in prop::collection::vec(any::<i128>(), 0..8)) {
            let mut fast = Encoder::new(0);
            let trimmed = UniPolyZ::new(vals.iter().copied().map(BigInt::from).collect());
            fast.begin_coeff(trimmed.coeffs().len());
            for v in &vals[..trimmed.coeffs().len()] {
                fast.push_i128(*v);
            }
            let slow = canonical_encode(&BiPolyZ::new(vec![trimmed]));
            prop_assert_eq!(fast.bytes(), slow.as_slice());
        }
    }
}
