#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "model.hpp"

namespace linsplit {

// Deque of strictly increasing indices in [0, capacity) with O(1) interior
// removal. Elements are linked through per-index prev/next slots, so no
// allocation happens after construction. Three optional cursors (best, feas,
// no_warp) point at live elements or are null (npos).
class CursorDeque {
public:
    enum Cursor : std::size_t { best_cursor = 0, feas_cursor = 1, no_warp_cursor = 2 };

    explicit CursorDeque(std::size_t capacity) : prev_(capacity, npos), next_(capacity, npos) {
#if defined(LINSPLIT_CHECKED)
        live_.assign(capacity, 0);
#endif
    }

    std::size_t capacity() const { return prev_.size(); }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool not_empty() const { return size_ != 0; }

    std::size_t front() const {
        LINSPLIT_EXPECTS(size_ > 0);
        return head_;
    }
    std::size_t back() const {
        LINSPLIT_EXPECTS(size_ > 0);
        return tail_;
    }
    std::size_t front2() const {
        LINSPLIT_EXPECTS(size_ > 1);
        return next_[head_];
    }

    // element behind live element v, or npos
    std::size_t after(std::size_t v) const {
        LINSPLIT_EXPECTS(live(v));
        return next_[v];
    }

    void insert_back(std::size_t v) {
        LINSPLIT_EXPECTS(v < prev_.size());
        LINSPLIT_EXPECTS(size_ == 0 || v > tail_);
        prev_[v] = size_ ? tail_ : npos;
        next_[v] = npos;
        if (size_)
            next_[tail_] = v;
        else
            head_ = v;
        tail_ = v;
        ++size_;
        ++pushes_;
#if defined(LINSPLIT_CHECKED)
        live_[v] = 1;
#endif
    }

    void remove_front() {
        LINSPLIT_EXPECTS(size_ > 0);
        unlink(head_);
    }
    void remove_front2() {
        LINSPLIT_EXPECTS(size_ > 1);
        unlink(next_[head_]);
    }
    void remove_back() {
        LINSPLIT_EXPECTS(size_ > 0);
        unlink(tail_);
    }

    // generic cursor access; the named wrappers below follow the usual
    // vocabulary of the split algorithms
    std::size_t at(Cursor c) const { return cursor_[c]; }
    bool is_null(Cursor c) const { return cursor_[c] == npos; }
    void set(Cursor c, std::size_t v) {
        LINSPLIT_EXPECTS(v == npos || live(v));
        cursor_[c] = v;
    }
    void clear(Cursor c) { cursor_[c] = npos; }

    bool has_prev(Cursor c) const {
        LINSPLIT_EXPECTS(live(cursor_[c]));
        return prev_[cursor_[c]] != npos;
    }
    bool has_next(Cursor c) const {
        LINSPLIT_EXPECTS(live(cursor_[c]));
        return next_[cursor_[c]] != npos;
    }
    std::size_t prev(Cursor c) const {
        LINSPLIT_EXPECTS(has_prev(c));
        return prev_[cursor_[c]];
    }
    std::size_t next(Cursor c) const {
        LINSPLIT_EXPECTS(has_next(c));
        return next_[cursor_[c]];
    }
    void move_prev(Cursor c) {
        LINSPLIT_EXPECTS(has_prev(c));
        cursor_[c] = prev_[cursor_[c]];
    }
    void move_next(Cursor c) {
        LINSPLIT_EXPECTS(has_next(c));
        cursor_[c] = next_[cursor_[c]];
        ++cursor_moves_;
    }
    void remove_prev(Cursor c) {
        LINSPLIT_EXPECTS(has_prev(c));
        unlink(prev_[cursor_[c]]);
    }
    void remove_next(Cursor c) {
        LINSPLIT_EXPECTS(has_next(c));
        unlink(next_[cursor_[c]]);
    }

    std::size_t best() const { return cursor_[best_cursor]; }
    void set_best(std::size_t v) { set(best_cursor, v); }
    bool has_prev() const { return has_prev(best_cursor); }
    bool has_next() const { return has_next(best_cursor); }
    std::size_t prev() const { return prev(best_cursor); }
    std::size_t next() const { return next(best_cursor); }
    void move_prev() { move_prev(best_cursor); }
    void move_next() { move_next(best_cursor); }
    void remove_prev() { remove_prev(best_cursor); }
    void remove_next() { remove_next(best_cursor); }

    std::size_t feas() const { return cursor_[feas_cursor]; }
    void set_feas(std::size_t v) { set(feas_cursor, v); }
    bool feas_has_prev() const { return has_prev(feas_cursor); }
    std::size_t feas_prev() const { return prev(feas_cursor); }
    void remove_feas_prev() { remove_prev(feas_cursor); }
    void move_feas_next() { move_next(feas_cursor); }

    std::size_t no_warp() const { return cursor_[no_warp_cursor]; }
    void set_no_warp(std::size_t v) { set(no_warp_cursor, v); }
    void move_no_warp_next() { move_next(no_warp_cursor); }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        out.reserve(size_);
        for (std::size_t v = size_ ? head_ : npos; v != npos; v = next_[v]) out.push_back(v);
        return out;
    }

    OpCounters counters() const { return {pushes_, pops_, cursor_moves_}; }

private:
    bool live(std::size_t v) const {
#if defined(LINSPLIT_CHECKED)
        return v < live_.size() && live_[v];
#else
        return v != npos;
#endif
    }

    void unlink(std::size_t v) {
        LINSPLIT_EXPECTS(live(v));
        LINSPLIT_EXPECTS(cursor_[0] != v && cursor_[1] != v && cursor_[2] != v);
        const std::size_t p = prev_[v];
        const std::size_t q = next_[v];
        if (p != npos)
            next_[p] = q;
        else
            head_ = q;
        if (q != npos)
            prev_[q] = p;
        else
            tail_ = p;
        --size_;
        ++pops_;
#if defined(LINSPLIT_CHECKED)
        live_[v] = 0;
#endif
    }

    std::vector<std::size_t> prev_;
    std::vector<std::size_t> next_;
#if defined(LINSPLIT_CHECKED)
    std::vector<char> live_;
#endif
    std::size_t head_ = npos;
    std::size_t tail_ = npos;
    std::size_t size_ = 0;
    std::array<std::size_t, 3> cursor_{npos, npos, npos};
    std::size_t pushes_ = 0;
    std::size_t pops_ = 0;
    std::size_t cursor_moves_ = 0;
};

// Plain deque for queues that never need interior removal or cursors. Each
// index enters at most once and in increasing order, so a flat array with
// head/tail offsets suffices and never wraps.
class IndexDeque {
public:
    // storage is left uninitialized; only [head, tail) is ever read
    explicit IndexDeque(std::size_t capacity) : buf_(new std::size_t[capacity]), cap_(capacity) {}

    std::size_t capacity() const { return cap_; }
    std::size_t size() const { return tail_ - head_; }
    bool empty() const { return tail_ == head_; }
    bool not_empty() const { return tail_ != head_; }

    std::size_t front() const {
        LINSPLIT_EXPECTS(not_empty());
        return buf_[head_];
    }
    std::size_t back() const {
        LINSPLIT_EXPECTS(not_empty());
        return buf_[tail_ - 1];
    }
    std::size_t front2() const {
        LINSPLIT_EXPECTS(size() > 1);
        return buf_[head_ + 1];
    }

    void insert_back(std::size_t v) {
        LINSPLIT_EXPECTS(v < cap_ && tail_ < cap_);
        LINSPLIT_EXPECTS(empty() || v > back());
        buf_[tail_++] = v;
        ++pushes_;
    }
    void remove_front() {
        LINSPLIT_EXPECTS(not_empty());
        ++head_;
        ++pops_;
    }
    void remove_back() {
        LINSPLIT_EXPECTS(not_empty());
        --tail_;
        ++pops_;
    }

    std::vector<std::size_t> elements() const {
        return {buf_.get() + head_, buf_.get() + tail_};
    }

    OpCounters counters() const { return {pushes_, pops_, 0}; }

private:
    std::unique_ptr<std::size_t[]> buf_;
    std::size_t cap_;
    std::size_t head_ = 0;
    std::size_t tail_ = 0;
    std::size_t pushes_ = 0;
    std::size_t pops_ = 0;
};

} // namespace linsplit
