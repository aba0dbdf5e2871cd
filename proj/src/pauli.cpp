#include "qadia/pauli.hpp"

#include "qadia/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace qadia {
namespace {

void check_letters(const std::string& letters) {
    for (char c : letters)
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
}

// P|j> = phase(j) |j ^ xmask>
struct StringAction {
    std::size_t xmask = 0;
    std::size_t zmask = 0;
    int ycount = 0;

    explicit StringAction(const std::string& letters) {
        for (std::size_t q = 0; q < letters.size(); ++q) {
            switch (letters[q]) {
            case 'X': xmask |= std::size_t{1} << q; break;
            case 'Y': xmask |= std::size_t{1} << q; zmask |= std::size_t{1} << q; ++ycount; break;
            case 'Z': zmask |= std::size_t{1} << q; break;
            default: break;
            }
        }
    }

    Complex phase(std::size_t j) const {
        // Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>
        int minus = __builtin_popcountll(j & zmask) & 1;
        Complex ph = minus ? -1.0 : 1.0;
        switch (ycount & 3) {
        case 1: ph *= Complex{0.0, 1.0}; break;
        case 2: ph *= -1.0; break;
        case 3: ph *= Complex{0.0, -1.0}; break;
        default: break;
        }
        return ph;
    }
};

Eigen::Matrix2cd single_pauli(char c) {
    Eigen::Matrix2cd m;
    switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex{0, -1}, Complex{0, 1}, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("invalid Pauli letter");
    }
    return m;
}

} // namespace

PauliSum::PauliSum(std::vector<PauliTerm> t, int n) : terms(std::move(t)), qubits(n) {
    for (auto& term : terms) {
        if (static_cast<int>(term.letters.size()) != n)
            throw std::invalid_argument("Pauli term length does not match qubit count");
        check_letters(term.letters);
        if (!std::isfinite(term.coeff)) throw std::invalid_argument("non-finite Pauli coefficient");
    }
    normalize();
}

void PauliSum::normalize(double drop_tol) {
    std::map<std::string, double> acc;
    for (const auto& t : terms) acc[t.letters] += t.coeff;
    terms.clear();
    for (const auto& [letters, coeff] : acc)
        if (std::abs(coeff) > drop_tol) terms.push_back({coeff, letters});
}

double PauliSum::coeff_of(const std::string& letters) const {
    for (const auto& t : terms)
        if (t.letters == letters) return t.coeff;
    return 0.0;
}

PauliSum& PauliSum::add(double coeff, const std::string& letters) {
    if (static_cast<int>(letters.size()) != qubits)
        throw std::invalid_argument("Pauli term length does not match qubit count");
    check_letters(letters);
    terms.push_back({coeff, letters});
    return *this;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
    if (a.qubits != b.qubits) throw std::invalid_argument("qubit count mismatch");
    PauliSum out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    out.normalize();
    return out;
}

PauliSum operator*(double s, const PauliSum& p) {
    PauliSum out = p;
    for (auto& t : out.terms) t.coeff *= s;
    out.normalize();
    return out;
}

int locality(const PauliSum& h) {
    int w = 0;
    for (const auto& t : h.terms) w = std::max(w, t.weight());
    return w;
}

Matrix pauli_string_dense(const std::string& letters) {
    check_letters(letters);
    const Eigen::Index dim = Eigen::Index{1} << letters.size();
    const StringAction act(letters);
    Matrix m = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < static_cast<std::size_t>(dim); ++j)
        m(static_cast<Eigen::Index>(j ^ act.xmask), static_cast<Eigen::Index>(j)) = act.phase(j);
    return m;
}

Matrix to_dense(const PauliSum& h) {
    const Eigen::Index dim = Eigen::Index{1} << h.qubits;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& t : h.terms) {
        const StringAction act(t.letters);
        for (std::size_t j = 0; j < static_cast<std::size_t>(dim); ++j)
            m(static_cast<Eigen::Index>(j ^ act.xmask), static_cast<Eigen::Index>(j)) +=
                t.coeff * act.phase(j);
    }
    return m;
}

PauliSum pauli_decompose(const Matrix& op, double herm_tol, double drop_tol) {
    if (!is_hermitian(op, herm_tol))
        throw std::invalid_argument("pauli_decompose: operator is not Hermitian");
    const int n = qubit_count_for_dim(op.rows());
    const auto dim = static_cast<std::size_t>(op.rows());
    PauliSum out;
    out.qubits = n;
    std::string letters(n, 'I');
    // enumerate all 4^n strings by base-4 counter
    std::vector<int> digits(n, 0);
    const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
    const std::size_t total = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int q = 0; q < n; ++q) {
            letters[q] = alphabet[c & 3];
            c >>= 2;
        }
        const StringAction act(letters);
        // tr(P M) = sum_j phase(j) * M(j, j ^ xmask)   (P Hermitian)
        Complex tr{0.0, 0.0};
        for (std::size_t j = 0; j < dim; ++j)
            tr += act.phase(j) * op(static_cast<Eigen::Index>(j),
                                    static_cast<Eigen::Index>(j ^ act.xmask));
        const double coeff = tr.real() / static_cast<double>(dim);
        if (std::abs(coeff) > drop_tol) out.terms.push_back({coeff, letters});
    }
    return out;
}

PauliSum pauli_decompose(const DenseOperator& op, double herm_tol, double drop_tol) {
    return pauli_decompose(op.m, herm_tol, drop_tol);
}

std::string to_text(const PauliSum& h) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& t : h.terms) os << t.coeff << " " << t.letters << "\n";
    return os.str();
}

PauliSum pauli_sum_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<PauliTerm> terms;
    int n = -1;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double coeff;
        std::string letters;
        if (!(ls >> coeff)) {
            std::string probe;
            std::istringstream check(line);
            if (check >> probe)
                throw std::invalid_argument("pauli text line " + std::to_string(lineno) + ": bad coefficient");
            continue; // blank or comment-only line
        }
        if (!(ls >> letters))
            throw std::invalid_argument("pauli text line " + std::to_string(lineno) + ": missing letters");
        check_letters(letters);
        if (n < 0) n = static_cast<int>(letters.size());
        if (static_cast<int>(letters.size()) != n)
            throw std::invalid_argument("pauli text line " + std::to_string(lineno) + ": inconsistent length");
        terms.push_back({coeff, letters});
    }
    if (n < 0) throw std::invalid_argument("pauli text: no terms");
    return PauliSum(std::move(terms), n);
}

TripleDecomposition psd_triple_decompose(const PauliSum& v3) {
    if (locality(v3) != 3)
        throw std::invalid_argument("psd_triple_decompose: input locality must be exactly 3");
    const int n = v3.qubits;
    TripleDecomposition out;
    out.y.qubits = n;
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();

    for (const auto& term : v3.terms) {
        if (term.weight() < 3) {
            out.y.terms.push_back(term);
            continue;
        }
        GadgetTriple tr;
        tr.source_letters = term.letters;
        tr.source_coeff = term.coeff;
        char sigma[3];
        int pos = 0;
        for (int q = 0; q < n; ++q)
            if (term.letters[q] != 'I') {
                tr.qubit[pos] = q + 1;
                sigma[pos] = term.letters[q];
                ++pos;
            }
        const double c = term.coeff;
        const double kappa = std::cbrt(4.0 * std::abs(c) / 3.0);
        // c > 0: first factor (1-s)/2, the rest (1+s)/2; c < 0: all (1+s)/2
        const double first_sign = c > 0 ? -1.0 : 1.0;
        tr.b[0] = kappa * 0.5 * (id2 + first_sign * single_pauli(sigma[0]));
        tr.b[1] = kappa * 0.5 * (id2 + single_pauli(sigma[1]));
        tr.b[2] = kappa * 0.5 * (id2 + single_pauli(sigma[2]));
        tr.scale = 1.0;

        // 2-local remainder: c*s1s2s3 = -6 B1B2B3 + rest
        //   c > 0: rest = c [1 + s2 + s3 + s2s3 - s1 - s1s2 - s1s3]
        //   c < 0: rest = -c [1 + s1 + s2 + s3 + s1s2 + s1s3 + s2s3]
        auto letters_for = [&](int mask) {
            std::string l(n, 'I');
            for (int b = 0; b < 3; ++b)
                if (mask & (1 << b)) l[tr.qubit[b] - 1] = sigma[b];
            return l;
        };
        if (c > 0) {
            out.y.add(c, letters_for(0));
            out.y.add(c, letters_for(0b010));
            out.y.add(c, letters_for(0b100));
            out.y.add(c, letters_for(0b110));
            out.y.add(-c, letters_for(0b001));
            out.y.add(-c, letters_for(0b011));
            out.y.add(-c, letters_for(0b101));
        } else {
            const double a = -c;
            for (int mask : {0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110})
                out.y.add(a, letters_for(mask));
        }
        out.triples.push_back(std::move(tr));
    }
    out.y.normalize();
    if (locality(out.y) > 2)
        throw std::runtime_error("psd_triple_decompose: remainder is not 2-local");
    return out;
}

Matrix triple_reconstruction(const TripleDecomposition& d, int n) {
    Matrix m = to_dense(PauliSum(d.y.terms, n));
    for (const auto& tr : d.triples) {
        Matrix prod = kron_lift(tr.b[0], {tr.qubit[0]}, n).m *
                      kron_lift(tr.b[1], {tr.qubit[1]}, n).m *
                      kron_lift(tr.b[2], {tr.qubit[2]}, n).m;
        m -= 6.0 * tr.scale * prod;
    }
    return m;
}

} // namespace qadia
