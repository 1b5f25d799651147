#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

namespace evenzeta {

/// Append-only memo of a sequence whose n-th entry is a function of the
/// entries before it. Reads of a computed prefix take a shared lock;
/// extension is serialized.
template <typename T>
class MemoTable {
public:
    using Extender = std::function<T(std::size_t index, std::span<const T> prefix)>;

    explicit MemoTable(Extender next) : next_(std::move(next)) {}

    MemoTable(MemoTable&& other) noexcept {
        std::unique_lock lock(other.mutex_);
        values_ = std::move(other.values_);
        next_ = std::move(other.next_);
    }
    MemoTable& operator=(MemoTable&&) = delete;
    MemoTable(const MemoTable&) = delete;
    MemoTable& operator=(const MemoTable&) = delete;

    /// Entry `index`, extending the table through it if needed.
    T at(std::size_t index) {
        {
            std::shared_lock lock(mutex_);
            if (index < values_.size()) {
                return values_[index];
            }
        }
        std::unique_lock lock(mutex_);
        extend_locked(index + 1);
        return values_[index];
    }

    void ensure_size(std::size_t count) {
        {
            std::shared_lock lock(mutex_);
            if (count <= values_.size()) {
                return;
            }
        }
        std::unique_lock lock(mutex_);
        extend_locked(count);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return values_.size();
    }

    /// Copy of the first `count` entries, extending as needed.
    std::vector<T> prefix(std::size_t count) {
        ensure_size(count);
        std::shared_lock lock(mutex_);
        return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count)};
    }

    /// Visits each of the first `count` entries under the shared lock.
    template <typename Fn>
    void for_each(std::size_t count, Fn&& fn) {
        ensure_size(count);
        std::shared_lock lock(mutex_);
        for (std::size_t i = 0; i < count; ++i) {
            fn(i, values_[i]);
        }
    }

private:
    void extend_locked(std::size_t count) {
        values_.reserve(count);
        while (values_.size() < count) {
            T next = next_(values_.size(), std::span<const T>(values_));
            values_.push_back(std::move(next));
        }
    }

    mutable std::shared_mutex mutex_;
    std::vector<T> values_;
    Extender next_;
};

}  // namespace evenzeta
