# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
# distutils: language = c++
"""Compiled reachability kernels; same contract as ``gencol._pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t
from libcpp.vector cimport vector

cnp.import_array()


cdef tuple _pack(vector[int64_t]& ptr, vector[int64_t]& members, vector[int64_t]& dists):
    cdef Py_ssize_t i
    out_ptr = np.empty(ptr.size(), dtype=np.int64)
    out_mem = np.empty(members.size(), dtype=np.int64)
    out_dist = np.empty(dists.size(), dtype=np.int64)
    cdef int64_t[::1] p = out_ptr
    cdef int64_t[::1] m = out_mem
    cdef int64_t[::1] d = out_dist
    for i in range(<Py_ssize_t>ptr.size()):
        p[i] = ptr[i]
    for i in range(<Py_ssize_t>members.size()):
        m[i] = members[i]
        d[i] = dists[i]
    return out_ptr, out_mem, out_dist


def weak_bfs(const int64_t[::1] indptr, const int64_t[::1] indices,
             const int64_t[::1] rank, int64_t radius):
    cdef Py_ssize_t n = rank.shape[0]
    cdef vector[int64_t] ptr, members, dists
    cdef vector[int64_t] seen, dist, queue
    cdef Py_ssize_t u, head, tail, j
    cdef int64_t x, y, dx, ru
    seen.assign(n, -1)
    dist.assign(n, 0)
    queue.resize(n)
    ptr.push_back(0)
    with nogil:
        for u in range(n):
            ru = rank[u]
            seen[u] = u
            dist[u] = 0
            members.push_back(u)
            dists.push_back(0)
            queue[0] = u
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                dx = dist[x]
                if dx >= radius:
                    continue
                for j in range(indptr[x], indptr[x + 1]):
                    y = indices[j]
                    if seen[y] != u and rank[y] > ru:
                        seen[y] = u
                        dist[y] = dx + 1
                        members.push_back(y)
                        dists.push_back(dx + 1)
                        queue[tail] = y
                        tail += 1
            ptr.push_back(members.size())
    return _pack(ptr, members, dists)


def strong_bfs(const int64_t[::1] indptr, const int64_t[::1] indices,
               const int64_t[::1] rank, int64_t radius):
    cdef Py_ssize_t n = rank.shape[0]
    cdef vector[int64_t] ptr, members, dists
    cdef vector[int64_t] seen, dist, queue
    cdef Py_ssize_t v, head, tail, j
    cdef int64_t x, y, dx, rv
    seen.assign(n, -1)
    dist.assign(n, 0)
    queue.resize(n)
    ptr.push_back(0)
    with nogil:
        for v in range(n):
            rv = rank[v]
            seen[v] = v
            dist[v] = 0
            queue[0] = v
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                dx = dist[x]
                if dx >= radius:
                    continue
                for j in range(indptr[x], indptr[x + 1]):
                    y = indices[j]
                    if seen[y] == v:
                        continue
                    seen[y] = v
                    dist[y] = dx + 1
                    if rank[y] < rv:
                        members.push_back(y)
                        dists.push_back(dx + 1)
                    else:
                        queue[tail] = y
                        tail += 1
            ptr.push_back(members.size())
    return _pack(ptr, members, dists)
