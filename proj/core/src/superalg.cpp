/*
 * Copyright 2026 the vircoad authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vircoad/superalg.hpp"

#include <cmath>

#include "vircoad/errors.hpp"

namespace vircoad {

namespace {

void check_sector_carrier(const Density& xi, Sector sector, const char* what) {
    const bool want_anti = sector == Sector::neveu_schwarz;
    if (xi.antiperiodic() != want_anti)
        throw SectorMismatch(std::string(what) + ": carrier periodicity does not match sector");
}

void check_same_sector(const SuperElement& A, const SuperElement& B, const char* what) {
    if (A.sector() != B.sector())
        throw SectorMismatch(std::string(what) + ": mixed Ramond/Neveu-Schwarz arguments");
}

Density d1(const Density& a) {
    if (a.antiperiodic()) return Density(a.weight(), derivative(a.antiperiodic_value()));
    return Density(a.weight(), derivative(a.periodic_value()));
}

double integral_of_product(const Density& a, const Density& b) {
    if (a.antiperiodic() != b.antiperiodic())
        throw SectorMismatch("integral_of_product: mixed carriers");
    if (a.antiperiodic()) return integrate_period(a.antiperiodic_value() * b.antiperiodic_value());
    return integrate_period(a.periodic_value() * b.periodic_value());
}

// Retags the weight without touching the carrier.  The mixed coadjoint terms
// are sums of products whose carrier weights do not add up to the output
// slot's weight; only the values matter there.
Density rewrap(double weight, const Density& a) {
    if (a.antiperiodic()) return Density(weight, a.antiperiodic_value());
    return Density(weight, a.periodic_value());
}

}  // namespace

SuperElement::SuperElement(TrigPoly X, double alpha, Density xi, Sector sector)
    : X_(std::move(X)), alpha_(alpha), xi_(std::move(xi)), sector_(sector) {
    check_sector_carrier(xi_, sector_, "SuperElement");
    if (xi_.weight() != -0.5) throw WeightMismatch("SuperElement: xi must have weight -1/2");
}

SuperElement SuperElement::even(TrigPoly X, double alpha, Sector sector) {
    return SuperElement(std::move(X), alpha, zero_odd_density(-0.5, sector), sector);
}

SuperElement SuperElement::odd(Density xi, Sector sector) {
    return SuperElement(TrigPoly(), 0.0, std::move(xi), sector);
}

bool SuperElement::even_part_zero(double eps) const {
    return X_.is_zero(eps) && std::abs(alpha_) <= eps;
}

bool SuperElement::odd_part_zero(double eps) const { return xi_.is_zero(eps); }

SuperCovector::SuperCovector(Density u_, double c_, Density phi_)
    : u(std::move(u_)), c(c_), phi(std::move(phi_)) {
    if (u.weight() != 2.0 || u.antiperiodic())
        throw WeightMismatch("SuperCovector: u must be a periodic weight-2 density");
    if (phi.weight() != 1.5) throw WeightMismatch("SuperCovector: phi must have weight 3/2");
}

Density zero_odd_density(double weight, Sector sector) {
    if (sector == Sector::neveu_schwarz) return Density(weight, HalfTrigPoly());
    return Density(weight, TrigPoly());
}

SuperElement super_bracket(const SuperElement& A, const SuperElement& B) {
    check_same_sector(A, B, "super_bracket");
    TrigPoly vec = A.X() * derivative(B.X()) - derivative(A.X()) * B.X();
    const Density prod = A.xi() * B.xi();  // weight -1, periodic
    vec += prod.periodic_value();
    Density odd = lie_derivative(A.X(), B.xi()) - lie_derivative(B.X(), A.xi());
    return SuperElement(std::move(vec), super_cocycle(A, B), std::move(odd), A.sector());
}

double super_cocycle(const SuperElement& A, const SuperElement& B) {
    check_same_sector(A, B, "super_cocycle");
    return gf_cocycle(A.X(), B.X(), CocycleKind::standard) +
           2.0 * integral_of_product(d1(A.xi()), d1(B.xi()));
}

bool is_odd(const SuperElement& A) {
    const bool has_even = !A.even_part_zero();
    const bool has_odd = !A.odd_part_zero();
    if (has_even && has_odd)
        throw SectorMismatch("is_odd: parity-mixed element has no single degree");
    return has_odd;
}

double super_jacobi_residual(const SuperElement& A, const SuperElement& B,
                             const SuperElement& C) {
    check_same_sector(A, B, "super_jacobi_residual");
    check_same_sector(B, C, "super_jacobi_residual");
    const int a = is_odd(A) ? 1 : 0, b = is_odd(B) ? 1 : 0, c = is_odd(C) ? 1 : 0;
    auto sgn = [](int p) { return p % 2 == 0 ? 1.0 : -1.0; };

    const SuperElement t1 = super_bracket(A, super_bracket(B, C));
    const SuperElement t2 = super_bracket(B, super_bracket(C, A));
    const SuperElement t3 = super_bracket(C, super_bracket(A, B));
    const double s1 = sgn(a * c), s2 = sgn(a * b), s3 = sgn(b * c);

    TrigPoly vec = s1 * t1.X() + s2 * t2.X() + s3 * t3.X();
    const double central = s1 * t1.alpha() + s2 * t2.alpha() + s3 * t3.alpha();
    Density odd = s1 * t1.xi() + (s2 * t2.xi() + s3 * t3.xi());

    double r = std::max(max_abs_coeff(vec), std::abs(central));
    r = std::max(r, odd.antiperiodic() ? max_abs_coeff(odd.antiperiodic_value())
                                       : max_abs_coeff(odd.periodic_value()));
    return r;
}

SuperCovector super_coad(const SuperElement& A, const SuperCovector& mu) {
    check_sector_carrier(A.xi(), A.sector(), "super_coad");
    check_sector_carrier(mu.phi, A.sector(), "super_coad");

    Density du = lie_derivative(A.X(), mu.u);
    du = du - Density(2.0, mu.c * derivative(A.X(), 3));
    const Density cross = 0.5 * (A.xi() * d1(mu.phi)) + 1.5 * (d1(A.xi()) * mu.phi);
    du = du + rewrap(2.0, cross);

    Density dphi = lie_derivative(A.X(), mu.phi);
    dphi = dphi + rewrap(1.5, mu.u * A.xi()) - 2.0 * mu.c * rewrap(1.5, d1(d1(A.xi())));
    return SuperCovector(std::move(du), 0.0, std::move(dphi));
}

double super_pairing(const SuperCovector& mu, const SuperElement& B) {
    return pairing(mu.u, Density(-1.0, B.X())) + mu.c * B.alpha() +
           integral_of_product(mu.phi, B.xi());
}

double super_duality_residual(const SuperElement& A, const SuperCovector& mu,
                              const SuperElement& B) {
    const double sign = (is_odd(A) && is_odd(B)) ? -1.0 : 1.0;
    return std::abs(super_pairing(super_coad(A, mu), B) +
                    sign * super_pairing(mu, super_bracket(A, B)));
}

double osp_cocycle(const SuperElement& A, const SuperElement& B, OspVariant variant) {
    check_same_sector(A, B, "osp_cocycle");
    if (A.sector() != Sector::neveu_schwarz)
        throw SectorMismatch("osp_cocycle: defined on the Neveu-Schwarz sector");
    const double q = variant == OspVariant::printed ? 4.0 : 0.25;
    const TrigPoly even_part = (derivative(A.X(), 3) + derivative(A.X())) * B.X();
    Density odd_factor = d1(d1(A.xi())) + q * A.xi();
    return integrate_period(even_part) + 2.0 * integral_of_product(odd_factor, B.xi());
}

}  // namespace vircoad
