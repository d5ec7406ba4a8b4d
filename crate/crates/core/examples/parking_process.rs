use parkstat::parking::{area, block_structure, is_upf, park};

fn main() {
    let alpha = [1, 1, 2, 2, 2, 6, 7, 7];
    let out = park(&alpha).unwrap().expect("every car parks");
    println!("preferences {alpha:?}");
    println!("car -> spot {:?}", out.car_to_spot);
    println!("area {}", area(&alpha).unwrap());

    // a car that finds its spot and everything after it taken leaves
    assert!(park(&[2, 2]).unwrap().is_none());

    let upf = [1, 1, 3, 4, 4];
    let bs = block_structure(&upf).unwrap();
    println!("{upf:?} unit interval: {}, blocks {:?}", is_upf(&upf), bs.blocks);
}
