#include "eqc/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

VertexSelection::VertexSelection(const Graph& g)
    : g_(&g), pos_(g.vertex_count(), kAbsent) {}

VertexSelection::VertexSelection(const Graph& g, std::span<const Vertex> members)
    : VertexSelection(g) {
    for (Vertex v : members)
        add(v);
}

void VertexSelection::add(Vertex v) {
    if (v >= pos_.size())
        throw std::out_of_range("VertexSelection::add: vertex out of range");
    if (pos_[v] != kAbsent)
        throw std::invalid_argument("VertexSelection::add: vertex already selected");
    std::uint64_t inside = 0;
    for (Vertex w : g_->neighbors(v))
        if (pos_[w] != kAbsent) ++inside;
    internal_edges_ += inside;
    pos_[v] = static_cast<Vertex>(members_.size());
    members_.push_back(v);
}

void VertexSelection::remove(Vertex v) {
    if (v >= pos_.size() || pos_[v] == kAbsent)
        throw std::invalid_argument("VertexSelection::remove: vertex not selected");
    Vertex at = pos_[v];
    pos_[v] = kAbsent;
    members_[at] = members_.back();
    members_.pop_back();
    if (at < members_.size())
        pos_[members_[at]] = at;
    std::uint64_t inside = 0;
    for (Vertex w : g_->neighbors(v))
        if (pos_[w] != kAbsent) ++inside;
    internal_edges_ -= inside;
}

std::vector<Vertex> VertexSelection::sorted_members() const {
    std::vector<Vertex> out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace eqc
