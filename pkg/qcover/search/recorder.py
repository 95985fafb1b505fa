from collections import UserDict


class SearchRecorder(UserDict):
    """Counts events of a branch-and-bound run: "nodes" expanded, "leaves"
    reached, "tau_checks" made on candidate families and "pruned" branches.
    Unrecorded events read as 0, so recorders from workers can be summed
    key by key."""
    def __getitem__(self, key):
        try:
            return self.data[key]
        except KeyError:
            return 0

    def __setitem__(self, key, value):
        self.data[key] = value

    def increment(self, key, amount=1):
        self[key] += amount

    def merge(self, other):
        for (key, value) in other.items():
            self[key] += value
        return self
