#!/usr/bin/env python3
"""Independent oracle for frozen test vectors.

Computes, with Python's hashlib/hmac (independent of the C++ code):
  1. the solution-vector bit scan for a fixed (cid, mk, r, m) tuple
  2. the HKDF-SHA512 pre-shared-key test vector
  3. a golden item set for the deterministic item-set generator
Run once; outputs are frozen into the C++ unit tests.
"""
import hashlib
import hmac
import struct


def lp(b: bytes) -> bytes:
    return struct.pack(">I", len(b)) + b


def puzzle_digest(cid: bytes, mk: bytes, r: bytes, counter: int) -> bytes:
    msg = b"CSA-PUZZLE-v1" + lp(cid) + lp(mk) + lp(r)
    if counter > 0:
        msg += bytes([counter])
    return hashlib.sha512(msg).digest()


def bits_msb_first(d: bytes, n: int):
    out = []
    for i in range(n):
        out.append((d[i // 8] >> (7 - (i % 8))) & 1)
    return out


def first_m_ones_mask(bits, m):
    kept, ones = [], 0
    for b in bits:
        if b == 1 and ones < m:
            kept.append(1)
            ones += 1
        else:
            kept.append(0)
    return kept, ones


def hkdf_sha512(ikm: bytes, salt: bytes, info: bytes, length: int) -> bytes:
    prk = hmac.new(salt, ikm, hashlib.sha512).digest()
    okm = b""
    t = b""
    block = 1
    while len(okm) < length:
        t = hmac.new(prk, t + info + bytes([block]), hashlib.sha512).digest()
        okm += t
        block += 1
    return okm[:length]


def item_stream(seed: bytes):
    k = 0
    while True:
        blk = hashlib.sha512(b"CSA-ITEMS-v1" + lp(seed) + struct.pack(">I", k)).digest()
        yield from blk
        k += 1


def generate_item_set(n: int, width: int, seed: bytes):
    mask = (1 << width) - 1
    stream = item_stream(seed)
    items = []
    while len(items) < n:
        word = bytes(next(stream) for _ in range(4))
        v = struct.unpack(">I", word)[0] & mask
        if v != 0:
            items.append(v)
    return items


# --- 1. derive_solution_vector oracle -----------------------------------
cid, mk, r, m = b"alice", bytes(32), bytes(16), 5
d0 = puzzle_digest(cid, mk, r, 0)
bits = bits_msb_first(d0, 512)
mask, ones = first_m_ones_mask(bits, m)
print("digest0 hex:", d0.hex())
print("popcount(digest):", sum(bits))
print("first-5-ones indices:", [i for i, b in enumerate(mask) if b])

# --- 2. HKDF pin ---------------------------------------------------------
psk = hkdf_sha512(bytes(32), b"CSA-PSK-v1", b"alice", 32)
print("psk hex:", psk.hex())

# --- 3. item set golden --------------------------------------------------
items = generate_item_set(6, 7, b"paper")
print("itemset n=6 w=7 seed='paper':", items)
items20a = generate_item_set(20, 8, b"s1")
items20b = generate_item_set(20, 8, b"s2")
print("n=20 sets differ:", items20a != items20b)

# --- 4. a small-n case that forces counter re-derivation ----------------
for probe in range(10000):
    c = b"probe-%d" % probe
    bits6 = bits_msb_first(puzzle_digest(c, mk, r, 0), 6)
    if sum(bits6) < 3:
        k = 1
        while True:
            bk = bits_msb_first(puzzle_digest(c, mk, r, k), 6)
            if sum(bk) >= 3:
                break
            k += 1
        mask6, _ = first_m_ones_mask(bk, 3)
        print("rederive cid:", c.decode(), "counter0 ones:", sum(bits6),
              "first ok counter:", k, "mask:", mask6)
        break
