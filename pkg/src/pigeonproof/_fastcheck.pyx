# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled clause database with watched-literal propagation and RUP/RAT.

Drop-in replacement for the hot path of ``propagation.ClauseDatabase``:
identical interface (add_clause, delete_clause, rup, rat, snapshot) and
identical verdicts; clause literals live in one flat buffer, watch and
occurrence lists are growable C vectors indexed by literal code.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset

ctypedef long long i64

cdef struct Vec:
    i64* data
    Py_ssize_t size
    Py_ssize_t cap


cdef inline int vec_push(Vec* v, i64 x) except -1:
    cdef Py_ssize_t ncap
    cdef i64* nd
    if v.size == v.cap:
        ncap = 8 if v.cap == 0 else v.cap * 2
        nd = <i64*>realloc(v.data, ncap * sizeof(i64))
        if nd == NULL:
            raise MemoryError()
        v.data = nd
        v.cap = ncap
    v.data[v.size] = x
    v.size += 1
    return 0


cdef inline void vec_swap_remove(Vec* v, Py_ssize_t i):
    v.size -= 1
    v.data[i] = v.data[v.size]


cdef inline Py_ssize_t lit_code(i64 lit):
    # positive literal v -> 2v, negative -> 2v+1
    if lit > 0:
        return (<Py_ssize_t>lit) << 1
    return ((<Py_ssize_t>(-lit)) << 1) | 1


cdef class FastDatabase:
    cdef i64* lits
    cdef Py_ssize_t nlits, cap_lits
    cdef Py_ssize_t* cstart
    cdef Py_ssize_t* csize
    cdef char* cactive
    cdef Py_ssize_t ncl, cap_cl
    cdef Vec* watch          # by literal code
    cdef Vec* occ            # by literal code
    cdef Py_ssize_t max_var  # arrays cover codes up to 2*max_var+1
    cdef signed char* val    # by variable
    cdef signed char* cmark  # RAT tautology scratch, by variable
    cdef signed char* dmark  # resolvent-internal scratch, by variable
    cdef i64* trail
    cdef Py_ssize_t ntrail, cap_trail
    cdef Py_ssize_t head
    cdef Vec units
    cdef Py_ssize_t empty_cid

    def __cinit__(self):
        self.cap_lits = 256
        self.lits = <i64*>malloc(self.cap_lits * sizeof(i64))
        self.cap_cl = 64
        self.cstart = <Py_ssize_t*>malloc(self.cap_cl * sizeof(Py_ssize_t))
        self.csize = <Py_ssize_t*>malloc(self.cap_cl * sizeof(Py_ssize_t))
        self.cactive = <char*>malloc(self.cap_cl)
        self.max_var = 64
        self.watch = <Vec*>malloc((2 * self.max_var + 2) * sizeof(Vec))
        self.occ = <Vec*>malloc((2 * self.max_var + 2) * sizeof(Vec))
        self.val = <signed char*>malloc(self.max_var + 1)
        self.cmark = <signed char*>malloc(self.max_var + 1)
        self.dmark = <signed char*>malloc(self.max_var + 1)
        self.cap_trail = 256
        self.trail = <i64*>malloc(self.cap_trail * sizeof(i64))
        if (self.lits == NULL or self.cstart == NULL or self.csize == NULL
                or self.cactive == NULL or self.watch == NULL or self.occ == NULL
                or self.val == NULL or self.cmark == NULL or self.dmark == NULL
                or self.trail == NULL):
            raise MemoryError()
        memset(self.watch, 0, (2 * self.max_var + 2) * sizeof(Vec))
        memset(self.occ, 0, (2 * self.max_var + 2) * sizeof(Vec))
        memset(self.val, 0, self.max_var + 1)
        memset(self.cmark, 0, self.max_var + 1)
        memset(self.dmark, 0, self.max_var + 1)
        self.nlits = 0
        self.ncl = 0
        self.ntrail = 0
        self.head = 0
        self.units.data = NULL
        self.units.size = 0
        self.units.cap = 0
        self.empty_cid = -1

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.watch != NULL:
            for i in range(2 * self.max_var + 2):
                free(self.watch[i].data)
            free(self.watch)
        if self.occ != NULL:
            for i in range(2 * self.max_var + 2):
                free(self.occ[i].data)
            free(self.occ)
        free(self.lits)
        free(self.cstart)
        free(self.csize)
        free(self.cactive)
        free(self.val)
        free(self.cmark)
        free(self.dmark)
        free(self.trail)
        free(self.units.data)

    cdef int _grow_vars(self, Py_ssize_t var) except -1:
        cdef Py_ssize_t new_max = self.max_var
        cdef Py_ssize_t old_codes, new_codes
        while new_max < var:
            new_max *= 2
        old_codes = 2 * self.max_var + 2
        new_codes = 2 * new_max + 2
        self.watch = <Vec*>realloc(self.watch, new_codes * sizeof(Vec))
        self.occ = <Vec*>realloc(self.occ, new_codes * sizeof(Vec))
        self.val = <signed char*>realloc(self.val, new_max + 1)
        self.cmark = <signed char*>realloc(self.cmark, new_max + 1)
        self.dmark = <signed char*>realloc(self.dmark, new_max + 1)
        if (self.watch == NULL or self.occ == NULL or self.val == NULL
                or self.cmark == NULL or self.dmark == NULL):
            raise MemoryError()
        memset(self.watch + old_codes, 0, (new_codes - old_codes) * sizeof(Vec))
        memset(self.occ + old_codes, 0, (new_codes - old_codes) * sizeof(Vec))
        memset(self.val + self.max_var + 1, 0, new_max - self.max_var)
        memset(self.cmark + self.max_var + 1, 0, new_max - self.max_var)
        memset(self.dmark + self.max_var + 1, 0, new_max - self.max_var)
        self.max_var = new_max
        return 0

    cdef inline signed char _value(self, i64 lit):
        cdef signed char v
        if lit > 0:
            v = self.val[<Py_ssize_t>lit]
            return v
        v = self.val[<Py_ssize_t>(-lit)]
        return <signed char>(-v)

    cdef inline int _assign(self, i64 lit) except -1:
        cdef i64* nt
        if lit > 0:
            self.val[<Py_ssize_t>lit] = 1
        else:
            self.val[<Py_ssize_t>(-lit)] = -1
        if self.ntrail == self.cap_trail:
            self.cap_trail *= 2
            nt = <i64*>realloc(self.trail, self.cap_trail * sizeof(i64))
            if nt == NULL:
                raise MemoryError()
            self.trail = nt
        self.trail[self.ntrail] = lit
        self.ntrail += 1
        return 0

    cdef void _undo_to(self, Py_ssize_t mark):
        cdef i64 lit
        while self.ntrail > mark:
            self.ntrail -= 1
            lit = self.trail[self.ntrail]
            if lit > 0:
                self.val[<Py_ssize_t>lit] = 0
            else:
                self.val[<Py_ssize_t>(-lit)] = 0
        if self.head > mark:
            self.head = mark

    # -- clause store -------------------------------------------------------

    def add_clause(self, lits) -> int:
        cdef Py_ssize_t cid = self.ncl
        cdef Py_ssize_t n = len(lits)
        cdef Py_ssize_t i, start
        cdef i64 lit, biggest = 0
        cdef Py_ssize_t* ns
        cdef char* na
        if self.ncl == self.cap_cl:
            self.cap_cl *= 2
            self.cstart = <Py_ssize_t*>realloc(self.cstart, self.cap_cl * sizeof(Py_ssize_t))
            self.csize = <Py_ssize_t*>realloc(self.csize, self.cap_cl * sizeof(Py_ssize_t))
            self.cactive = <char*>realloc(self.cactive, self.cap_cl)
            if self.cstart == NULL or self.csize == NULL or self.cactive == NULL:
                raise MemoryError()
        while self.nlits + n > self.cap_lits:
            self.cap_lits *= 2
            self.lits = <i64*>realloc(self.lits, self.cap_lits * sizeof(i64))
            if self.lits == NULL:
                raise MemoryError()
        start = self.nlits
        for i in range(n):
            lit = lits[i]
            self.lits[start + i] = lit
            if lit > biggest:
                biggest = lit
            elif -lit > biggest:
                biggest = -lit
        if biggest > self.max_var:
            self._grow_vars(<Py_ssize_t>biggest)
        self.nlits += n
        self.cstart[cid] = start
        self.csize[cid] = n
        self.cactive[cid] = 1
        self.ncl += 1
        for i in range(n):
            vec_push(&self.occ[lit_code(self.lits[start + i])], cid)
        if n == 0:
            self.empty_cid = cid
        elif n == 1:
            vec_push(&self.units, cid)
        else:
            vec_push(&self.watch[lit_code(self.lits[start])], cid)
            vec_push(&self.watch[lit_code(self.lits[start + 1])], cid)
        return cid

    def delete_clause(self, cid) -> None:
        cdef Py_ssize_t c = cid
        cdef Py_ssize_t i
        self.cactive[c] = 0
        if self.csize[c] == 0:
            self.empty_cid = -1
            for i in range(self.ncl):
                if self.cactive[i] and self.csize[i] == 0:
                    self.empty_cid = i
                    break

    def clause(self, cid) -> tuple:
        cdef Py_ssize_t c = cid
        cdef Py_ssize_t s = self.cstart[c]
        return tuple(self.lits[s + i] for i in range(self.csize[c]))

    def __len__(self):
        cdef Py_ssize_t i, total = 0
        for i in range(self.ncl):
            if self.cactive[i]:
                total += 1
        return total

    # -- propagation --------------------------------------------------------

    cdef Py_ssize_t _propagate(self) except -2:
        cdef i64 lit, flit, first, other
        cdef Py_ssize_t i, j, cid, s, sz
        cdef Vec* wl
        cdef signed char fv
        cdef bint moved
        if self.empty_cid >= 0 and self.cactive[self.empty_cid]:
            return self.empty_cid
        while self.head < self.ntrail:
            lit = self.trail[self.head]
            self.head += 1
            flit = -lit
            wl = &self.watch[lit_code(flit)]
            i = 0
            while i < wl.size:
                cid = wl.data[i]
                if not self.cactive[cid]:
                    vec_swap_remove(wl, i)
                    continue
                s = self.cstart[cid]
                sz = self.csize[cid]
                if self.lits[s] == flit:
                    self.lits[s] = self.lits[s + 1]
                    self.lits[s + 1] = flit
                first = self.lits[s]
                fv = self._value(first)
                if fv > 0:
                    i += 1
                    continue
                moved = False
                for j in range(s + 2, s + sz):
                    other = self.lits[j]
                    if self._value(other) >= 0:
                        self.lits[s + 1] = other
                        self.lits[j] = flit
                        vec_push(&self.watch[lit_code(other)], cid)
                        vec_swap_remove(wl, i)
                        moved = True
                        break
                if moved:
                    continue
                if fv == 0:
                    self._assign(first)
                    i += 1
                else:
                    return cid
        return -1

    cdef Py_ssize_t _seed_units(self) except -2:
        cdef Py_ssize_t i = 0, cid
        cdef i64 lit
        cdef signed char v
        while i < self.units.size:
            cid = self.units.data[i]
            if not self.cactive[cid]:
                vec_swap_remove(&self.units, i)
                continue
            lit = self.lits[self.cstart[cid]]
            v = self._value(lit)
            if v < 0:
                return cid
            if v == 0:
                self._assign(lit)
            i += 1
        return -1

    cdef int _ensure_capacity(self, lits) except -1:
        # Checked clauses may mention variables the store has never seen.
        cdef i64 lit, biggest = 0
        for lit_obj in lits:
            lit = lit_obj
            if lit > biggest:
                biggest = lit
            elif -lit > biggest:
                biggest = -lit
        if biggest > self.max_var:
            self._grow_vars(<Py_ssize_t>biggest)
        return 0

    def rup(self, lits) -> bool:
        """Conflict after assuming the complement of every literal?"""
        cdef bint conflicted
        cdef i64 lit
        cdef signed char v
        self._ensure_capacity(lits)
        conflicted = self._seed_units() >= 0
        if not conflicted:
            for lit_obj in lits:
                lit = lit_obj
                v = self._value(-lit)
                if v < 0:
                    conflicted = True
                    break
                if v == 0:
                    self._assign(-lit)
        if not conflicted:
            conflicted = self._propagate() >= 0
        self._undo_to(0)
        return conflicted

    def rat(self, lits) -> bool:
        """RAT on the first literal: every resolvent tautological or RUP."""
        cdef i64 pivot = lits[0]
        cdef i64 neg_pivot = -pivot
        cdef i64 lit, d
        cdef Py_ssize_t var
        cdef signed char v
        cdef bint conflicted
        cdef Py_ssize_t mark, i, j, cid, s, sz
        cdef Vec* ov
        cdef bint tautology, result = True
        self._ensure_capacity(lits)
        conflicted = self._seed_units() >= 0
        if not conflicted:
            for lit_obj in lits[1:]:
                lit = lit_obj
                v = self._value(-lit)
                if v < 0:
                    conflicted = True
                    break
                if v == 0:
                    self._assign(-lit)
        if not conflicted:
            conflicted = self._propagate() >= 0
        if conflicted:
            self._undo_to(0)
            return True
        mark = self.ntrail
        for lit_obj in lits[1:]:
            lit = lit_obj
            var = <Py_ssize_t>(lit if lit > 0 else -lit)
            self.cmark[var] = 1 if lit > 0 else -1
        ov = &self.occ[lit_code(neg_pivot)]
        i = 0
        while i < ov.size:
            cid = ov.data[i]
            if not self.cactive[cid]:
                vec_swap_remove(ov, i)
                continue
            i += 1
            s = self.cstart[cid]
            sz = self.csize[cid]
            tautology = False
            for j in range(s, s + sz):
                d = self.lits[j]
                if d == neg_pivot:
                    continue
                var = <Py_ssize_t>(d if d > 0 else -d)
                # complement in the added clause, or inside this resolvent
                if self.cmark[var] == (-1 if d > 0 else 1):
                    tautology = True
                    break
                if self.dmark[var] == (-1 if d > 0 else 1):
                    tautology = True
                    break
                self.dmark[var] = 1 if d > 0 else -1
            for j in range(s, s + sz):
                d = self.lits[j]
                var = <Py_ssize_t>(d if d > 0 else -d)
                self.dmark[var] = 0
            if tautology:
                continue
            conflicted = False
            for j in range(s, s + sz):
                d = self.lits[j]
                if d == neg_pivot:
                    continue
                v = self._value(-d)
                if v < 0:
                    conflicted = True
                    break
                if v == 0:
                    self._assign(-d)
            if not conflicted:
                conflicted = self._propagate() >= 0
            self._undo_to(mark)
            if not conflicted:
                result = False
                break
        for lit_obj in lits[1:]:
            lit = lit_obj
            var = <Py_ssize_t>(lit if lit > 0 else -lit)
            self.cmark[var] = 0
        self._undo_to(0)
        return result

    def snapshot(self) -> tuple:
        """Assigned (variable, value) pairs; for state-restoration checks."""
        cdef Py_ssize_t var
        out = []
        for var in range(1, self.max_var + 1):
            if self.val[var] != 0:
                out.append((var, int(self.val[var])))
        return tuple(out)
