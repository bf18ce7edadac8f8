#include "pleth/coeffring/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace pleth {

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return y;
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Rational v = y[i].second + a * x[j].second;
            if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
    if (a.is_zero()) return {};
    SparseVec out = x;
    for (auto& e : out) e.second *= a;
    return out;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[static_cast<size_t>(i)].emplace_back(i, 1);
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c) throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < c; ++j) {
            const Rational& v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (!v.is_zero()) m.data_[static_cast<size_t>(j)].emplace_back(i, v);
        }
    }
    return m;
}

Matrix Matrix::monomial(int rows, const std::vector<int>& target, const std::vector<int>& sign) {
    Matrix m(rows, static_cast<int>(target.size()));
    for (size_t j = 0; j < target.size(); ++j) {
        if (target[j] < 0 || target[j] >= rows) throw std::out_of_range("monomial matrix target");
        if (sign[j] != 0) m.data_[j].emplace_back(target[j], sign[j]);
    }
    return m;
}

void Matrix::set_col(int j, SparseVec v) { data_.at(static_cast<size_t>(j)) = std::move(v); }

Rational Matrix::at(int r, int c) const {
    const auto& col = data_.at(static_cast<size_t>(c));
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const std::pair<int, Rational>& e, int x) { return e.first < x; });
    if (it != col.end() && it->first == r) return it->second;
    return 0;
}

void Matrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto& col = data_[static_cast<size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const std::pair<int, Rational>& e, int x) { return e.first < x; });
    if (it != col.end() && it->first == r) {
        if (v.is_zero()) col.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        col.insert(it, {r, v});
    }
}

size_t Matrix::nonzeros() const {
    size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

SparseVec Matrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, a] : v) out = axpy(out, a, data_.at(static_cast<size_t>(j)));
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix m(rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j) m.data_[static_cast<size_t>(j)] = apply(o.data_[static_cast<size_t>(j)]);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix m(rows_, cols_);
    for (size_t j = 0; j < data_.size(); ++j) m.data_[j] = axpy(data_[j], 1, o.data_[j]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix m(rows_, cols_);
    for (size_t j = 0; j < data_.size(); ++j) m.data_[j] = axpy(data_[j], -1, o.data_[j]);
    return m;
}

Matrix Matrix::scaled(const Rational& a) const {
    Matrix m(rows_, cols_);
    for (size_t j = 0; j < data_.size(); ++j) m.data_[j] = pleth::scaled(data_[j], a);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : data_[static_cast<size_t>(j)]) m.data_[static_cast<size_t>(i)].emplace_back(j, v);
    return m;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix m(rows_ * o.rows_, cols_ * o.cols_);
    for (int j = 0; j < cols_; ++j)
        for (int l = 0; l < o.cols_; ++l) {
            SparseVec& out = m.data_[static_cast<size_t>(j * o.cols_ + l)];
            for (const auto& [i, a] : data_[static_cast<size_t>(j)])
                for (const auto& [k, b] : o.data_[static_cast<size_t>(l)]) out.emplace_back(i * o.rows_ + k, a * b);
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int j = 0; j < a.cols_; ++j) m.data_[static_cast<size_t>(j)] = a.data_[static_cast<size_t>(j)];
    for (int j = 0; j < b.cols_; ++j) {
        SparseVec c = b.data_[static_cast<size_t>(j)];
        for (auto& e : c) e.first += a.rows_;
        m.data_[static_cast<size_t>(a.cols_ + j)] = std::move(c);
    }
    return m;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::vector<int> pos(static_cast<size_t>(rows_), -1);
    for (size_t i = 0; i < rows.size(); ++i) pos.at(static_cast<size_t>(rows[i])) = static_cast<int>(i);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        SparseVec out;
        for (const auto& [i, v] : data_.at(static_cast<size_t>(cols[j])))
            if (pos[static_cast<size_t>(i)] >= 0) out.emplace_back(pos[static_cast<size_t>(i)], v);
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        m.data_[j] = std::move(out);
    }
    return m;
}

std::vector<std::vector<Rational>> Matrix::dense() const {
    std::vector<std::vector<Rational>> d(static_cast<size_t>(rows_), std::vector<Rational>(static_cast<size_t>(cols_)));
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : data_[static_cast<size_t>(j)]) d[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    return d;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    auto d = dense();
    std::vector<std::vector<std::string>> s(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        for (const auto& v : d[i]) s[i].push_back(v.str());
    return s;
}

Matrix Matrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rational>> d(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& s : rows[i]) d[i].push_back(Rational::parse(s));
    return from_dense(d);
}

}  // namespace pleth
