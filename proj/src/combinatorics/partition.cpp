#include "combinatorics/partition.hpp"

#include <numeric>
#include <sstream>

namespace qth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            fail(ErrorCode::InvalidArgument, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorCode::InvalidArgument,
                 "partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::single_row(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative partition size");
    return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::single_column(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative partition size");
    return Partition(std::vector<int>(n, 1));
}

Partition Partition::parse(const std::string &text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<int> parts;
    std::stringstream in(body);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            parts.push_back(std::stoi(piece));
        } catch (const std::exception &) {
            fail(ErrorCode::InvalidArgument, "cannot parse partition: " + text);
        }
    }
    return Partition(parts);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) conj.resize(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(conj);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(size_);
    for (int i = 0; i < num_parts(); ++i)
        for (int j = 0; j < parts_[i]; ++j) out.push_back(Cell{i, j});
    return out;
}

int Partition::n_stat() const {
    int s = 0;
    for (int i = 0; i < num_parts(); ++i) s += i * parts_[i];
    return s;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::pair<int, int> arm_leg(const Partition &mu, Cell x) {
    if (!mu.contains(x))
        fail(ErrorCode::CellOutsideDiagram,
             "cell (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                 ") outside diagram of " + mu.to_string());
    int arm = mu.part(x.row) - x.col - 1;
    int leg = 0;
    for (int r = x.row + 1; r < mu.num_parts(); ++r)
        if (mu.part(r) > x.col) ++leg;
    return {arm, leg};
}

bool dominates(const Partition &a, const Partition &b) {
    if (a.size() != b.size()) return false;
    int pa = 0, pb = 0;
    int rows = std::max(a.num_parts(), b.num_parts());
    for (int i = 0; i < rows; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

namespace {

void extend_partition(int remaining, int cap, std::vector<int> &stack,
                      std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        stack.push_back(next);
        extend_partition(remaining - next, next, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative partition size");
    std::vector<Partition> out;
    std::vector<int> stack;
    extend_partition(n, n, stack, out);
    return out;
}

BigInt centralizer_order(const Partition &lambda) {
    BigInt z = 1;
    int run_value = 0, run_length = 0;
    auto flush = [&] {
        for (int i = 0; i < run_length; ++i) z *= run_value;
        z *= factorial(run_length);
    };
    for (int p : lambda.parts()) {
        if (p == run_value) {
            ++run_length;
        } else {
            if (run_length) flush();
            run_value = p;
            run_length = 1;
        }
    }
    if (run_length) flush();
    return z;
}

std::vector<CycleType> cycle_types(int n) {
    std::vector<CycleType> out;
    for (const Partition &lambda : partitions_of(n))
        out.push_back(CycleType{lambda, centralizer_order(lambda)});
    return out;
}

} // namespace qth
