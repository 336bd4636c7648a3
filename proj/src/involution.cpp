#include "ascent/involution.hpp"

#include <optional>

#include "ascent/counting.hpp"

namespace ascent {

PeakDeletion delete_first_peaks(const Interval& iv)
{
    if (iv.size() < 2)
        throw Error(ErrorKind::SizeTooSmall, "size-1 intervals have no peak to delete");
    Interval smaller(delete_first_peak(iv.bottom(), 1), delete_first_peak(iv.top(), 1));
    return {smaller, iv.stats().first_ascent_bottom, iv.stats().r};
}

Interval insert_first_peaks(const Interval& iv, int a_target, int r_target)
{
    const auto parts = ascent_composition(iv.bottom()).parts;
    const int c1 = parts.front();
    const int r = iv.stats().r;

    // Legal (a', b') pairs: b' a partial sum c_1 + ... + c_s (s <= r) with any
    // a' <= c_1, or a' = b' < c_1.
    std::vector<std::pair<int, int>> legal;
    int partial = 0;
    for (int s = 1; s <= r; ++s) {
        partial += parts[s - 1];
        for (int a2 = 0; a2 <= c1; ++a2)
            legal.emplace_back(a2, partial);
    }
    for (int a2 = 0; a2 < c1; ++a2)
        legal.emplace_back(a2, a2);

    std::optional<Interval> found;
    int hits = 0;
    for (auto [a2, b2] : legal) {
        Interval cand(insert_first_peak(iv.bottom(), 1, a2), insert_first_peak(iv.top(), 1, b2));
        if (cand.stats().first_ascent_bottom == a_target && cand.stats().r == r_target) {
            ++hits;
            if (!found)
                found = std::move(cand);
        }
    }
    if (hits == 0)
        throw Error(ErrorKind::NoSuchInsertion, "no insertion reaches a = " + std::to_string(a_target) +
                                                    ", r = " + std::to_string(r_target));
    if (hits > 1)
        throw InternalError(std::to_string(hits) + " insertions reach the same statistics");
    return *found;
}

Interval Involution::apply(const Interval& iv)
{
    if (iv.size() == 1)
        return iv;
    auto key = std::make_pair(iv.bottom().word(), iv.top().word());
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    auto del = delete_first_peaks(iv);
    Interval image = insert_first_peaks(apply(del.smaller), del.r, del.a);
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), image);
    return image;
}

std::size_t Involution::memo_size() const
{
    std::lock_guard lock(mutex_);
    return memo_.size();
}

Interval involution_f(const Interval& iv)
{
    family_size(iv.bottom(), PathFamily::plain());
    Involution f;
    return f.apply(iv);
}

}  // namespace ascent
