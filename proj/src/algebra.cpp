#include "pk/algebra.hpp"

#include "pk/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pk {

namespace {

void require_dim(std::size_t n) {
    if (n == 0) {
        throw InputError("dimension must be at least 1");
    }
}

void require_same(std::size_t a, std::size_t b) {
    if (a != b) {
        throw InputError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace

RandomQuantity::RandomQuantity(std::size_t n) : c_(n, Rational(0)) {
    require_dim(n);
}

RandomQuantity::RandomQuantity(std::vector<Rational> components) : c_(std::move(components)) {
    require_dim(c_.size());
}

RandomQuantity::RandomQuantity(std::initializer_list<Rational> components) : c_(components) {
    require_dim(c_.size());
}

bool RandomQuantity::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool RandomQuantity::is_event() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero() || r == Rational(1); });
}

bool RandomQuantity::is_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.sign() >= 0; });
}

RandomQuantity& RandomQuantity::operator+=(const RandomQuantity& o) {
    require_same(dim(), o.dim());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

RandomQuantity& RandomQuantity::operator-=(const RandomQuantity& o) {
    require_same(dim(), o.dim());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

RandomQuantity& RandomQuantity::operator*=(const RandomQuantity& o) {
    require_same(dim(), o.dim());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] *= o.c_[i];
    }
    return *this;
}

RandomQuantity& RandomQuantity::operator*=(const Rational& r) {
    for (auto& x : c_) {
        x *= r;
    }
    return *this;
}

RandomQuantity RandomQuantity::operator-() const {
    RandomQuantity out(*this);
    for (auto& x : out.c_) {
        x = -x;
    }
    return out;
}

RandomQuantity RandomQuantity::operator*(const Event& e) const {
    require_same(dim(), e.dim());
    RandomQuantity out(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!e.contains(i)) {
            out.c_[i] = Rational(0);
        }
    }
    return out;
}

RandomQuantity RandomQuantity::operator+(const Rational& r) const {
    RandomQuantity out(*this);
    for (auto& x : out.c_) {
        x += r;
    }
    return out;
}

std::string RandomQuantity::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        os << (i ? "," : "") << c_[i];
    }
    os << ')';
    return os.str();
}

Event::Event(std::size_t n) : m_(n, false) {
    require_dim(n);
}

Event::Event(std::vector<bool> members) : m_(std::move(members)) {
    require_dim(m_.size());
}

Event::Event(std::initializer_list<int> indicator) {
    require_dim(indicator.size());
    for (int v : indicator) {
        if (v != 0 && v != 1) {
            throw InputError("event indicator must be 0 or 1");
        }
        m_.push_back(v == 1);
    }
}

Event Event::one(std::size_t n) {
    require_dim(n);
    return Event(std::vector<bool>(n, true));
}

Event Event::atom(std::size_t n, std::size_t i) {
    Event e(n);
    if (i >= n) {
        throw InputError("atom index out of range");
    }
    e.m_[i] = true;
    return e;
}

Event Event::from_quantity(const RandomQuantity& x) {
    if (!x.is_event()) {
        throw InputError("quantity " + x.str() + " is not an event");
    }
    std::vector<bool> m(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        m[i] = !x[i].is_zero();
    }
    return Event(std::move(m));
}

std::size_t Event::count() const {
    return static_cast<std::size_t>(std::count(m_.begin(), m_.end(), true));
}

std::vector<std::size_t> Event::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (m_[i]) {
            out.push_back(i);
        }
    }
    return out;
}

RandomQuantity Event::quantity() const {
    std::vector<Rational> c(m_.size());
    for (std::size_t i = 0; i < m_.size(); ++i) {
        c[i] = Rational(m_[i] ? 1 : 0);
    }
    return RandomQuantity(std::move(c));
}

Event Event::operator!() const {
    Event out(*this);
    out.m_.flip();
    return out;
}

Event operator&(const Event& a, const Event& b) {
    require_same(a.dim(), b.dim());
    Event out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.m_[i] = a.m_[i] && b.m_[i];
    }
    return out;
}

Event operator|(const Event& a, const Event& b) {
    require_same(a.dim(), b.dim());
    Event out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.m_[i] = a.m_[i] || b.m_[i];
    }
    return out;
}

bool Event::leq(const Event& other) const {
    return (*this & other) == *this;
}

std::string Event::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < m_.size(); ++i) {
        s += (i ? "," : "");
        s += m_[i] ? '1' : '0';
    }
    return s + "]";
}

RandomQuantity embed_scalar(const Rational& r, std::size_t n) {
    require_dim(n);
    return RandomQuantity(std::vector<Rational>(n, r));
}

bool is_event(const RandomQuantity& x) {
    return x.is_event();
}

std::vector<Event> atoms_of(std::span<const Event> events, std::size_t n) {
    require_dim(n);
    for (const auto& e : events) {
        require_same(e.dim(), n);
    }
    // Coordinates with the same membership signature across all generators
    // lie in the same minterm.
    std::map<std::vector<bool>, std::vector<bool>> minterms;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> signature;
        signature.reserve(events.size());
        for (const auto& e : events) {
            signature.push_back(e.contains(i));
        }
        auto [it, inserted] = minterms.try_emplace(std::move(signature), std::vector<bool>(n, false));
        it->second[i] = true;
    }
    std::vector<Event> atoms;
    atoms.reserve(minterms.size());
    for (auto& [sig, members] : minterms) {
        atoms.emplace_back(std::move(members));
    }
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

std::vector<Event> generated_subalgebra(std::span<const Event> events, std::size_t n) {
    const auto atoms = atoms_of(events, n);
    if (atoms.size() > 20) {
        throw ResourceLimit("generated subalgebra has more than 2^20 elements");
    }
    std::vector<Event> out;
    const std::size_t total = std::size_t{1} << atoms.size();
    out.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        Event e(n);
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            if ((mask >> k) & 1U) {
                e = e | atoms[k];
            }
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Event> all_events(std::size_t n) {
    require_dim(n);
    if (n > 20) {
        throw ResourceLimit("refusing to enumerate 2^n events for n > 20");
    }
    std::vector<Event> out;
    const std::size_t total = std::size_t{1} << n;
    out.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<bool> m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = ((mask >> i) & 1U) != 0;
        }
        out.emplace_back(std::move(m));
    }
    return out;
}

Event positive_combination_nonzero(std::span<const Rational> p, std::span<const Event> c) {
    if (c.empty() || p.size() != c.size()) {
        throw InputError("positive combination needs one positive weight per event and at least one event");
    }
    const std::size_t n = c.front().dim();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (p[i].sign() <= 0) {
            throw InputError("weights must be positive");
        }
        if (c[i].is_zero()) {
            throw InputError("events must be nonzero");
        }
        require_same(c[i].dim(), n);
    }
    for (const auto& atom : atoms_of(c, n)) {
        if (!atom.leq(c.front())) {
            continue;
        }
        // Each generator either contains the atom or is disjoint from it, so
        // the combination equals (p_1 + sum of the others containing it) * atom.
        Rational total(0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (atom.leq(c[i])) {
                total += p[i];
            }
        }
        if (total.sign() > 0) {
            return atom;
        }
    }
    throw InputError("no atom below the first event"); // unreachable for nonzero C_1
}

Event disjunction(std::span<const Event> events, std::size_t n) {
    Event out(n);
    for (const auto& e : events) {
        out = out | e;
    }
    return out;
}

} // namespace pk
