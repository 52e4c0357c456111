"""Counter-based deterministic generator (splitmix64). Reproducible everywhere."""

_MASK = (1 << 64) - 1


class SplitMix64:
    """Tiny keyed generator; same seed, same stream, on any platform."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def bits(self, n):
        """n random bits (n <= 64)."""
        return self.next_u64() >> (64 - n) if n else 0

    def below(self, n):
        """Uniform integer in [0, n)."""
        return self.next_u64() % n
