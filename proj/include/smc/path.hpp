#pragma once

#include <memory>
#include <vector>

namespace smc {

// Trajectories are stored as a persistent prefix tree: siblings produced by a
// branching event share their common history instead of copying it.
struct PathNode {
    double state;
    std::shared_ptr<const PathNode> parent;
};

using PathPtr = std::shared_ptr<const PathNode>;

inline PathPtr extend_path(PathPtr parent, double state) {
    return std::make_shared<const PathNode>(PathNode{state, std::move(parent)});
}

// Read-only view of a trajectory prefix x_{0:n}. Markov models only touch
// back(); non-Markovian ones can materialize the full history.
class TrajectoryView {
public:
    TrajectoryView(const PathNode* leaf, std::size_t length)
        : leaf_(leaf), data_(nullptr), length_(length) {}

    TrajectoryView(const double* data, std::size_t length)
        : leaf_(nullptr), data_(data), length_(length) {}

    std::size_t size() const { return length_; }

    double back() const { return leaf_ ? leaf_->state : data_[length_ - 1]; }

    std::vector<double> to_vector() const {
        std::vector<double> out(length_);
        if (data_) {
            out.assign(data_, data_ + length_);
        } else {
            const PathNode* node = leaf_;
            for (std::size_t i = length_; i-- > 0;) {
                out[i] = node->state;
                node = node->parent.get();
            }
        }
        return out;
    }

private:
    const PathNode* leaf_;
    const double* data_;
    std::size_t length_;
};

inline std::vector<double> materialize(const PathPtr& leaf) {
    std::size_t n = 0;
    for (const PathNode* node = leaf.get(); node; node = node->parent.get()) ++n;
    return TrajectoryView(leaf.get(), n).to_vector();
}

} // namespace smc
